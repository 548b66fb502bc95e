"""
Error Handler for verification nodes and CLI commands
"""
from typing import Any, Dict, Optional

from ..utils.logging import log_error, print_error, print_warning
from .errors import NumericError, RemainderError, ResourceError


def error_details(error: Exception) -> Dict[str, Any]:
    """예외가 가진 구조화된 필드 (잔차, 상한, 나머지 등)"""
    if isinstance(error, NumericError):
        return {"worst_residual": error.worst_residual, "iterations": error.iterations}
    if isinstance(error, ResourceError):
        return {"requested": error.requested, "cap": error.cap}
    if isinstance(error, RemainderError):
        return {"remainder": [str(c) for c in error.remainder]}
    return {}


class ErrorHandler:
    """
    검증 노드와 CLI 명령이 공유하는 에러 처리
    모든 예외는 같은 형식의 딕셔너리가 되어 VerificationState["errors"] 에 쌓입니다.
    """

    @staticmethod
    def handle_node_error(
        node_name: str,
        error: Exception,
        n: Optional[int] = None,
        context: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        예외를 로그 파일과 stderr 에 남기고 표준 딕셔너리로 변환합니다.

        Args:
            node_name: 스위트 또는 명령 이름 (예: "roots", "cmd_curve")
            error: 발생한 예외
            n: 실패한 차수 n
            context: 로그에 남길 위치 정보

        Returns:
            {node_name, error_message, error_type, n, details[, context]}
        """
        n = getattr(error, "n", None) if n is None else n
        error_info = {
            "node_name": node_name,
            "error_message": str(error),
            "error_type": type(error).__name__,
            "n": n,
            "details": error_details(error),
        }
        if context:
            error_info["context"] = context

        where = f" (n={n})" if n is not None else ""
        log_error(f"{node_name} error{where}", context=context or node_name, exception=error)
        print_error(f"{node_name} failed{where}: {error}", context=context or node_name)
        return error_info

    @staticmethod
    def handle_warning(node_name: str, message: str, n: Optional[int] = None) -> None:
        """실패한 검사처럼 예외가 아닌 문제를 경고로 출력합니다."""
        print_warning(f"n={n}: {message}" if n is not None else message, context=node_name)
