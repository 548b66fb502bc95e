"""
Shared plumbing for verification nodes
"""
from typing import Callable, List, Tuple

from ..core.error_handler import ErrorHandler
from ..core.errors import PascalianError
from ..state import SuiteResult
from ..utils import log_step_end, log_step_start, print_success


def run_suite(suite: str, n_max: int, checks: int, body: Callable[[], List[str]]) -> Tuple[SuiteResult, List[dict]]:
    """
    스위트 본문을 실행하고 시간을 기록합니다.
    도메인 예외는 ErrorHandler 로 표준화되어 실패로 기록되며 다른 스위트는 계속 진행됩니다.

    Returns:
        (SuiteResult, 에러 딕셔너리 목록)
    """
    start_time = log_step_start(suite)
    errors: List[dict] = []
    try:
        failures = body()
    except PascalianError as e:
        errors.append(ErrorHandler.handle_node_error(suite, e, context=f"verify {suite}"))
        failures = [f"{type(e).__name__}: {e}"]
    duration = log_step_end(suite, start_time)

    if failures:
        ErrorHandler.handle_warning(suite, f"{len(failures)} check(s) failed")
    else:
        print_success(f"{suite}: {checks} checks passed ({duration:.2f}s)")

    result = SuiteResult(
        suite=suite,
        n_max=n_max,
        passed=not failures,
        checks=checks,
        failures=failures,
        duration_seconds=duration,
    )
    return result, errors
