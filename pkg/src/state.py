"""
State definition for the LangGraph verification pipeline
"""
from typing import Optional, TypedDict

from .models.run_config import RunConfig


class SuiteResult(TypedDict):
    """스위트 하나의 실행 결과"""

    suite: str
    n_max: int
    passed: bool
    checks: int  # 수행한 n (또는 (n, k)) 의 수
    failures: list[str]
    duration_seconds: float


class VerificationState(TypedDict):
    """State schema shared across the verification nodes"""

    # Input
    suites: list[str]  # 실행할 스위트 이름 (SUITE_NAMES 순서)
    n_max: int

    # Configuration
    config: RunConfig

    # Output
    results: list[SuiteResult]

    # Error tracking
    errors: list[dict]  # ErrorHandler.handle_node_error 의 표준 에러 딕셔너리
    timing_log_path: Optional[str]


def create_state(suites: list[str], n_max: int, config: RunConfig) -> VerificationState:
    return VerificationState(
        suites=list(suites),
        n_max=n_max,
        config=config,
        results=[],
        errors=[],
        timing_log_path=None,
    )
