"""
Root Service
P_n 의 모든 복소근 (double 정밀도 Aberth-Ehrlich 후 mpmath 다듬기), 근 분류, 환형 영역과 비에트 검사
"""
import cmath
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mpmath.ctx_mp import MPContext

from ..core.constants import (
    ANNULUS_INNER,
    ANNULUS_OUTER,
    RECIPROCAL_ANNULUS_OUTER,
    REFINE_DIGITS_PER_DEGREE,
    REFINE_GUARD_DIGITS,
    REFINE_STEP_BITS,
    ROOT_CLASS_GENERIC,
    ROOT_CLASS_IMAGINARY,
    ROOT_CLASS_REAL,
    ROOT_CLASS_TRIVIAL,
    SEED_ANGLE_OFFSET,
    SEED_CURVE_MIN_DEGREE,
    SEED_PERTURBATION,
    SEED_PERTURBATION_PHASE,
    SEED_RADIUS,
    SOLVER_DEGREE_CAP,
    SYMMETRY_TOL,
)
from ..core.errors import DomainError, NumericError, ResourceError
from ..models.roots import AnnulusReport, RootSet, VietaReport
from ..models.run_config import Tolerances
from ..models.polynomial import IntPoly
from .combinatorics_service import central_binomial
from .curve_service import CurveService
from .polynomial_service import p_poly, q_poly


def _normalized(poly: IntPoly) -> np.ndarray:
    """최고차 계수로 나눈 계수 (내림차순, np.polyval 용). 정수/정수 나눗셈이라 넘침이 없습니다."""
    lead = poly.leading
    return np.array([c / lead for c in reversed(poly.coeffs)], dtype=float)


def scaled_residuals(poly: IntPoly, roots: Sequence[complex]) -> np.ndarray:
    """|P(z)| / sum_k |c_k||z|^k (계수 배율에 무관한 후방 오차)"""
    z = np.asarray(roots, dtype=complex)
    if not len(z):
        return np.zeros(0)
    desc = _normalized(poly)
    numerator = np.abs(np.polyval(desc, z))
    denominator = np.polyval(np.abs(desc), np.abs(z))
    return numerator / denominator


def _seeds(n: int, degree: int, in_square_plane: bool) -> np.ndarray:
    """
    초기값. n >= SEED_CURVE_MIN_DEGREE 이면 극한 곡선 근사점 z_m 에 작은 섭동을 더하고
    (홀수 n 은 z_m^2, m = 1..degree), 그보다 작으면 원 위의 등간격 점을 씁니다.
    """
    if n >= SEED_CURVE_MIN_DEGREE:
        m = np.arange(1, n + 1)
        z_m = CurveService().seeds(n)
        points = np.asarray(z_m) + SEED_PERTURBATION * np.exp(1j * SEED_PERTURBATION_PHASE * m)
        return points[:degree] ** 2 if in_square_plane else points
    radius = SEED_RADIUS ** 2 if in_square_plane else SEED_RADIUS
    angles = SEED_ANGLE_OFFSET + 2 * math.pi * np.arange(degree) / max(degree, 1)
    return radius * np.exp(1j * angles)


def aberth_ehrlich(
    poly: IntPoly,
    seeds: np.ndarray,
    tol: float,
    max_iterations: int,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Aberth-Ehrlich 동시 반복 (야코비 방식, 벡터화).

    Returns:
        (근, 정규화 잔차, 반복 횟수). 수렴 판정은 호출자가 잔차로 합니다.
    """
    if poly.degree <= 0:
        return np.zeros(0, dtype=complex), np.zeros(0), 0
    desc = _normalized(poly)
    deriv = np.polyder(desc)
    z = np.array(seeds, dtype=complex)
    residuals = scaled_residuals(poly, z)
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.polyval(desc, z) / np.polyval(deriv, z)
            inverse = 1.0 / (z[:, None] - z[None, :])
            np.fill_diagonal(inverse, 0.0)
            delta = ratio / (1.0 - ratio * inverse.sum(axis=1))
        delta = np.where(np.isfinite(delta), delta, 0.0)
        z = z - delta
        residuals = scaled_residuals(poly, z)
        if residuals.max() < tol / 100:
            break
        if np.max(np.abs(delta)) <= 1e-16 * max(1.0, float(np.max(np.abs(z)))):
            break
    return z, residuals, iteration


def working_digits(n: int) -> int:
    """P_n 근을 다듬고 검증할 때 쓰는 십진 자릿수"""
    return REFINE_GUARD_DIGITS + math.ceil(REFINE_DIGITS_PER_DEGREE * n)


def precision_context(n: int) -> MPContext:
    # 근 노드가 스레드 풀에서 호출하므로 전역 mpmath.mp 의 정밀도는 바꾸지 않습니다.
    ctx = MPContext()
    ctx.dps = working_digits(n)
    return ctx


def _descending(ctx: MPContext, poly: IntPoly) -> list:
    return [ctx.mpf(c) for c in reversed(poly.coeffs)]


def _horner(coeffs: Sequence, z):
    """(P(z), P'(z)) 를 한 번에 계산. coeffs 는 내림차순"""
    value = derivative = 0
    for c in coeffs:
        derivative = derivative * z + value
        value = value * z + c
    return value, derivative


def newton_corrections(ctx: MPContext, poly: IntPoly, points: Sequence[complex]) -> List[float]:
    """
    ctx 정밀도로 계산한 |P(z) / P'(z)|.
    단순근 근처에서 가장 가까운 근까지의 거리와 같은 크기이므로 정규화 잔차와 달리
    계수 상쇄가 심한 영역에서도 정확도를 드러냅니다.
    """
    coeffs = _descending(ctx, poly)
    out = []
    for z in points:
        value, derivative = _horner(coeffs, ctx.mpc(z))
        if value == 0:
            out.append(0.0)
        elif derivative == 0:
            out.append(math.inf)
        else:
            out.append(float(abs(value / derivative)))
    return out


def precise_scaled_residuals(ctx: MPContext, poly: IntPoly, points: Sequence[complex]) -> List[float]:
    """scaled_residuals 와 같은 양을 ctx 정밀도로 계산"""
    coeffs = _descending(ctx, poly)
    magnitudes = [abs(c) for c in coeffs]
    out = []
    for z in points:
        z = ctx.mpc(z)
        value, _ = _horner(coeffs, z)
        scale, _ = _horner(magnitudes, abs(z))
        out.append(float(abs(value) / scale) if scale else 0.0)
    return out


def refine_roots(ctx: MPContext, poly: IntPoly, points: Sequence[complex], max_iterations: int) -> Tuple[list, int]:
    """
    double 근사를 ctx 정밀도의 Aberth-Ehrlich 반복 (가우스-자이델 방식)으로 다듬습니다.
    상대 보정이 2^-REFINE_STEP_BITS 이하가 된 근은 고정하며,
    모두 고정되거나 max_iterations 에 닿으면 멈춥니다.

    Returns:
        (ctx.mpc 근 목록, 반복 횟수)
    """
    z = [ctx.mpc(complex(p)) for p in points]
    if not z:
        return z, 0
    coeffs = _descending(ctx, poly)
    settled = [False] * len(z)
    step_tol = ctx.mpf(2) ** -REFINE_STEP_BITS
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        for i, zi in enumerate(z):
            if settled[i]:
                continue
            value, derivative = _horner(coeffs, zi)
            if value == 0:
                settled[i] = True
                continue
            if derivative == 0:
                continue
            ratio = value / derivative
            repulsion = ctx.fsum(1 / (zi - zj) for j, zj in enumerate(z) if j != i and zj != zi)
            denominator = 1 - ratio * repulsion
            delta = ratio / denominator if denominator != 0 else ratio
            z[i] = zi - delta
            settled[i] = abs(delta) <= step_tol * max(1, abs(z[i]))
        if all(settled):
            break
    return z, iteration


def _argument_key(z: complex) -> Tuple[float, float]:
    angle = cmath.phase(z) % (2 * math.pi)
    return (round(angle, 12), round(abs(z), 12))


class RootService:
    """
    근 계산과 근 기반 검사를 담당하는 서비스 클래스
    허용 오차는 RunConfig.tolerances 에서 받습니다.
    """

    def __init__(self, tolerances: Optional[Tolerances] = None, curve_service: Optional[CurveService] = None):
        self.tolerances = tolerances or Tolerances()
        self.curve_service = curve_service or CurveService(self.tolerances.boundary)

    def solve_roots(self, n: int) -> RootSet:
        """
        P_n 의 n 개 근을 모두 계산합니다.

        홀수 n 은 자명근 -1 을 정확히 나눈 뒤 q_n(w) 의 근 w 에서 z = ±√w 로 복원하고,
        짝수 n 은 P_n 을 직접 풉니다. 자명근은 마지막에 다시 붙입니다.
        double 단계의 근사는 working_digits(n) 자릿수에서 다시 다듬은 뒤 double 로 반올림하고,
        정규화 잔차와 뉴턴 보정을 같은 정밀도로 계산해 판정합니다.

        Raises:
            DomainError: n < 1
            ResourceError: n > 512
            NumericError: 최대 반복 후에도 잔차나 뉴턴 보정이 허용 오차 이상인 경우
        """
        if n < 1:
            raise DomainError(f"n must be positive, got {n}")
        if n > SOLVER_DEGREE_CAP:
            raise ResourceError(f"n={n} exceeds the solver degree cap {SOLVER_DEGREE_CAP}", requested=n, cap=SOLVER_DEGREE_CAP)

        tol = self.tolerances.residual
        max_iterations = self.tolerances.max_iterations
        ctx = precision_context(n)
        poly = p_poly(n)
        if n % 2:
            q = q_poly(n)
            w, _, iterations = aberth_ehrlich(q, _seeds(n, q.degree, True), tol, max_iterations)
            w, refinements = refine_roots(ctx, q, w, max_iterations)
            root_w = [complex(ctx.sqrt(v)) for v in w]
            nontrivial = root_w + [-r for r in root_w]
        else:
            z, _, iterations = aberth_ehrlich(poly, _seeds(n, n, False), tol, max_iterations)
            z, refinements = refine_roots(ctx, poly, z, max_iterations)
            nontrivial = [complex(r) for r in z]
        iterations += refinements

        nontrivial = sorted(nontrivial, key=_argument_key)
        residuals = precise_scaled_residuals(ctx, poly, nontrivial)
        corrections = newton_corrections(ctx, poly, nontrivial)
        trivial_index = None
        roots = nontrivial
        if n % 2:
            roots = nontrivial + [complex(-1.0, 0.0)]
            residuals.append(0.0)
            corrections.append(0.0)
            trivial_index = n - 1

        worst_residual = max(residuals, default=0.0)
        worst_correction = max(corrections, default=0.0)
        if not (worst_residual < tol and worst_correction < tol):
            raise NumericError(
                f"root solver for P_{n} did not converge: worst scaled residual {worst_residual:.3e}, "
                f"worst Newton correction {worst_correction:.3e} after {iterations} iterations",
                worst_residual=max(worst_residual, worst_correction),
                iterations=iterations,
                n=n,
            )
        return RootSet(n, tuple(roots), tuple(residuals), iterations, trivial_index, tuple(corrections))

    def classify_root(self, rs: RootSet, index: int) -> str:
        """trivial | real | imaginary | generic (임계값 기준)"""
        if index == rs.trivial_index:
            return ROOT_CLASS_TRIVIAL
        z = rs.roots[index]
        if abs(z.imag) < self.tolerances.imag:
            return ROOT_CLASS_REAL
        if abs(z.real) < self.tolerances.imag:
            return ROOT_CLASS_IMAGINARY
        return ROOT_CLASS_GENERIC

    def classify_all(self, rs: RootSet) -> List[str]:
        return [self.classify_root(rs, i) for i in range(rs.n)]

    def count_real_roots(self, rs: RootSet) -> int:
        return sum(1 for z in rs.roots if abs(z.imag) < self.tolerances.imag)

    def count_imaginary_pairs(self, rs: RootSet) -> int:
        """허수축 위의 켤레쌍 수 (허수부가 양수인 쪽만 셈)"""
        return sum(1 for z in rs.roots if abs(z.real) < self.tolerances.imag and z.imag > 0)

    def _annulus(self, rs: RootSet, points: Sequence[complex], inner: float, outer: float) -> AnnulusReport:
        tol = self.tolerances.annulus
        norms = [abs(z) for z in points]
        violations = tuple(z for z, r in zip(points, norms) if not inner - tol < r < outer + tol)
        return AnnulusReport(
            rs.n,
            min(norms, default=math.nan),
            max(norms, default=math.nan),
            inner,
            outer,
            violations,
        )

    def annulus_check(self, rs: RootSet) -> AnnulusReport:
        """비자명근이 √2-1 < |z| < 1 안에 있는지 (자명근이 없으면 공허하게 통과)"""
        return self._annulus(rs, rs.nontrivial(), ANNULUS_INNER, ANNULUS_OUTER)

    def reciprocal_annulus_check(self, rs: RootSet) -> AnnulusReport:
        """R_n 의 비자명근 (P_n 근의 역수) 이 1 < |z| < 1+√2 안에 있는지"""
        return self._annulus(rs, [1 / z for z in rs.nontrivial()], ANNULUS_OUTER, RECIPROCAL_ANNULUS_OUTER)

    def vieta_check(self, rs: RootSet) -> VietaReport:
        n = rs.n
        roots = np.asarray(rs.roots, dtype=complex)
        expected_sum = -1.0 if n % 2 else 2.0 / (n + 2) - 1.0
        expected_product = (-1) ** n / central_binomial(n)
        return VietaReport(
            n,
            complex(roots.sum()),
            complex(np.prod(roots)),
            expected_sum,
            expected_product,
            self.tolerances.vieta(n),
        )

    def is_conjugate_closed(self, rs: RootSet, tol: float = SYMMETRY_TOL) -> bool:
        roots = np.asarray(rs.roots, dtype=complex)
        return all(np.min(np.abs(roots - z.conjugate())) < tol for z in rs.roots)

    def is_negation_closed(self, rs: RootSet, tol: float = SYMMETRY_TOL) -> bool:
        """홀수 n 의 비자명근은 z -> -z 에 대해 닫혀 있어야 합니다"""
        roots = np.asarray(rs.nontrivial(), dtype=complex)
        return all(np.min(np.abs(roots + z)) < tol for z in roots)

    def expected_real_count(self, n: int) -> int:
        return n % 2

    def expected_imaginary_pairs(self, n: int) -> int:
        return 1 if n % 4 == 3 else 0
