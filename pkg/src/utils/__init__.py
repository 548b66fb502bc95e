"""
Utility modules for the Pascalian toolkit
"""
from .logging import log_error, print_error, print_warning, print_success, console, err_console
from .timing import (
    log_step_start,
    log_step_end,
    get_timing_summary,
    save_timing_log,
    reset_timing,
)

__all__ = [
    "log_error",
    "print_error",
    "print_warning",
    "print_success",
    "console",
    "err_console",
    "log_step_start",
    "log_step_end",
    "get_timing_summary",
    "save_timing_log",
    "reset_timing",
]
