"""
Logging utilities for the Pascalian toolkit
"""
import traceback
from datetime import datetime
from typing import Optional

from rich.console import Console
from rich.markup import escape

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)


def log_error(message: str, context: str = "general", exception: Optional[Exception] = None) -> None:
    """
    Append error messages to a log file with timestamps for troubleshooting.

    Args:
        message: Error message to log
        context: Context where the error occurred
        exception: Optional exception object
    """
    try:
        # core 패키지가 이 모듈을 import하므로 순환 import를 피해 지연 로드
        from ..config import get_log_dir
        from ..core.constants import ERROR_LOG_FILE

        log_dir = get_log_dir()
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        with open(log_dir / ERROR_LOG_FILE, "a", encoding="utf-8") as f:
            error_msg = f"[{timestamp}] ({context}) {message}"
            if exception:
                error_msg += f"\n  Exception type: {type(exception).__name__}"
                error_msg += f"\n  Exception details: {str(exception)}"
                tb_str = ''.join(traceback.format_exception(type(exception), exception, exception.__traceback__))
                error_msg += f"\n  Traceback:\n{tb_str}"
            error_msg += "\n"
            f.write(error_msg)
    except Exception:
        pass


def print_error(message: str, context: str = "general", exception: Optional[Exception] = None) -> None:
    """
    Print error message to stderr and log it to file.

    Args:
        message: Error message to display
        context: Context where the error occurred
        exception: Optional exception object
    """
    err_console.print(f"[red]✗[/red] " + escape(f"[{context}] {message}"), markup=True)

    if exception:
        err_console.print(f"  Exception type: {type(exception).__name__}", markup=False)

    log_error(message, context, exception)


def print_warning(message: str, context: str = "general", exception: Optional[Exception] = None) -> None:
    """
    Print warning message to stderr.

    Args:
        message: Warning message to display
        context: Context where the warning occurred
        exception: Optional exception object
    """
    err_console.print(f"[yellow]⚠[/yellow] " + escape(f"[{context}] {message}"), markup=True)

    if exception:
        err_console.print(f"  Exception type: {type(exception).__name__}", markup=False)
        err_console.print(f"  Exception details: {str(exception)}", markup=False)


def print_success(message: str) -> None:
    """Print a success line to stderr (stdout stays machine-readable)."""
    err_console.print(f"[green]✓[/green] " + escape(message), markup=True)
