"""
Exact verification nodes: recursions, generating functions, factorization, gcd, algebra
"""
from ..core.constants import SUITE_ALGEBRA, SUITE_FACTOR, SUITE_GCD, SUITE_GF, SUITE_RECURSIONS
from ..services.algebra_service import AlgebraService
from ..services.polynomial_service import PolynomialService
from ..services.series_service import gf_mismatches
from ..state import VerificationState
from .common import run_suite


def _append(state: VerificationState, outcome) -> VerificationState:
    result, errors = outcome
    state["results"].append(result)
    state["errors"].extend(errors)
    return state


def recursions_node(state: VerificationState) -> VerificationState:
    n_max = state["n_max"]
    return _append(state, run_suite(SUITE_RECURSIONS, n_max, n_max + 1, lambda: PolynomialService().recursion_failures(n_max)))


def gf_node(state: VerificationState) -> VerificationState:
    n_max = state["n_max"]
    return _append(state, run_suite(SUITE_GF, n_max, n_max + 1, lambda: gf_mismatches(n_max)))


def factor_node(state: VerificationState) -> VerificationState:
    n_max = state["n_max"]
    service = AlgebraService(state["config"].max_workers)
    return _append(state, run_suite(SUITE_FACTOR, n_max, (n_max + 1) // 2, lambda: service.factor_failures(n_max)))


def gcd_node(state: VerificationState) -> VerificationState:
    n_max = state["n_max"]
    return _append(state, run_suite(SUITE_GCD, n_max, max(n_max - 2, 0), lambda: PolynomialService().gcd_failures(n_max)))


def algebra_node(state: VerificationState) -> VerificationState:
    n_max = state["n_max"]
    service = AlgebraService(state["config"].max_workers)
    return _append(state, run_suite(SUITE_ALGEBRA, n_max, n_max, lambda: service.algebra_failures(n_max)))
