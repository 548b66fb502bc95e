"""
Numerical verification node: annulus, classification, Vieta and Γ_n checks per n
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Tuple

from ..core.constants import SUITE_ROOTS
from ..core.error_handler import ErrorHandler
from ..core.errors import PascalianError
from ..services.curve_service import CurveService
from ..services.root_service import RootService
from ..state import VerificationState
from .common import run_suite


def root_failures(n: int, roots: RootService, curve: CurveService) -> List[str]:
    """P_n 하나에 대한 근 검사. 실패한 항목 이름을 반환"""
    rs = roots.solve_roots(n)
    failures = []
    if not roots.annulus_check(rs).passed:
        failures.append(f"annulus n={n}")
    if not roots.reciprocal_annulus_check(rs).passed:
        failures.append(f"reciprocal annulus n={n}")
    if roots.count_real_roots(rs) != roots.expected_real_count(n):
        failures.append(f"real root count n={n}")
    if roots.count_imaginary_pairs(rs) != roots.expected_imaginary_pairs(n):
        failures.append(f"imaginary pair count n={n}")
    if not roots.vieta_check(rs).passed:
        failures.append(f"vieta n={n}")
    if not roots.is_conjugate_closed(rs):
        failures.append(f"conjugate closure n={n}")
    if n % 2 and not roots.is_negation_closed(rs):
        failures.append(f"negation symmetry n={n}")
    if n >= 2 and not curve.no_roots_in_gamma(rs).passed:
        failures.append(f"root inside Γ_{n}")
    return failures


def roots_node(state: VerificationState) -> VerificationState:
    """
    n = 1..n_max 를 작업자 스레드로 나누어 검사하고 n 순서대로 모읍니다.
    개별 n 의 수치 실패는 해당 n 의 실패로만 기록됩니다.
    """
    config = state["config"]
    n_max = state["n_max"]
    roots = RootService(config.tolerances)
    curve = CurveService(config.tolerances.boundary, config.boundary_samples)
    errors: List[dict] = []

    def check_one(n: int) -> Tuple[int, List[str]]:
        try:
            return n, root_failures(n, roots, curve)
        except PascalianError as e:
            errors.append(ErrorHandler.handle_node_error(SUITE_ROOTS, e, n=n))
            return n, [f"n={n}: {type(e).__name__}"]

    def body() -> List[str]:
        if n_max < 1:
            return []
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            futures = [executor.submit(check_one, n) for n in range(1, n_max + 1)]
            results = [future.result() for future in as_completed(futures)]
        # n 순서대로 정렬
        return [f for _, fs in sorted(results, key=lambda item: item[0]) for f in fs]

    result, suite_errors = run_suite(SUITE_ROOTS, n_max, n_max, body)
    state["results"].append(result)
    state["errors"].extend(sorted(errors, key=lambda e: e.get("n") or 0) + suite_errors)
    return state
