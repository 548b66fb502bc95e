"""
Curve Service
K_n, 근이 없는 영역 Γ_n 과 경계, 극한 곡선 ∂Γ, 근사점 z_m, 수렴 지표
"""
import cmath
import math
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.constants import (
    BISECTION_STEPS,
    BOUNDARY_SAMPLES,
    BOUNDARY_TOL,
    CURVE_IDENTITY_TOL,
    LIMIT_DISK_RADIUS,
)
from ..core.errors import DomainError
from ..models.curve import Approximants, ConvergenceReport, CurveSpec, GammaReport
from ..models.roots import RootSet
from .polynomial_service import r_poly

TWO_PI = 2.0 * math.pi


def k_value(spec: CurveSpec) -> float:
    return spec.K


def gamma_value(z: complex, spec: CurveSpec) -> float:
    """
    |z| / (|1+z|^(1/n) |1+z^2|), 극한에서는 |z| / |1+z^2|.
    분모가 0이면 +inf 를 반환합니다 (z = -1, ±i 는 항상 영역 밖).
    """
    z = complex(z)
    numerator = abs(z)
    denominator = abs(1 + z * z)
    if not spec.is_limit:
        denominator *= abs(1 + z) ** (1.0 / spec.n)
    if denominator == 0.0:
        return math.inf if numerator > 0 else 0.0
    return numerator / denominator


def gamma_values(z: np.ndarray, spec: CurveSpec) -> np.ndarray:
    """gamma_value 의 벡터화 버전"""
    z = np.asarray(z, dtype=complex)
    numerator = np.abs(z)
    denominator = np.abs(1 + z * z)
    if not spec.is_limit:
        denominator = denominator * np.abs(1 + z) ** (1.0 / spec.n)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = numerator / denominator
    return np.where(denominator == 0.0, np.where(numerator > 0, np.inf, 0.0), out)


def in_gamma(z: complex, spec: CurveSpec) -> bool:
    return abs(complex(z)) <= 1.0 and gamma_value(z, spec) <= spec.K


def limit_region_check(z: complex) -> bool:
    """Γ 의 원판 표현: |z - i| <= √2 이고 |z + i| <= √2"""
    z = complex(z)
    return abs(z - 1j) <= LIMIT_DISK_RADIUS and abs(z + 1j) <= LIMIT_DISK_RADIUS


def boundary_point(theta: float) -> complex:
    """
    w = e^{iθ} 에 대해 wz^2 - 2z + w = 0 의 |z| <= 1 해.

    두 해의 곱이 1 이므로 절댓값이 큰 해 (1 + sqrt(1-w^2))/w 를 먼저 구하고
    작은 해를 그 역수로 얻습니다. θ = 0 에서는 이중근 1 입니다.
    """
    w = cmath.exp(1j * theta)
    s = cmath.sqrt(1 - w * w)
    return w / (1 + s)


def boundary_points(thetas: Sequence[float]) -> np.ndarray:
    w = np.exp(1j * np.asarray(thetas, dtype=float))
    return w / (1 + np.sqrt(1 - w * w))


def approximants(n: int) -> Approximants:
    """z_m = boundary_point(2πm/n), m = 1..n"""
    if n < 1:
        raise DomainError(f"approximants need n >= 1, got {n}")
    thetas = TWO_PI * np.arange(1, n + 1) / n
    points = boundary_points(thetas)
    return Approximants(n, tuple(complex(z) for z in points))


def approximant_defect(points: Sequence[complex], n: int) -> float:
    """max_m |2z_m/(1+z_m^2) - e^{2πim/n}| (0 에 가까워야 함)"""
    z = np.asarray(points, dtype=complex)
    w = np.exp(1j * TWO_PI * np.arange(1, n + 1) / n)
    return float(np.max(np.abs(2 * z / (1 + z * z) - w))) if len(z) else 0.0


def _sample_thetas(count: int) -> np.ndarray:
    return TWO_PI * np.arange(count) / count


def boundary_samples(spec: CurveSpec, count: int = BOUNDARY_SAMPLES) -> np.ndarray:
    """
    경계 표본점.

    극한 곡선은 boundary_point 매개화로 얻고, 유한 n 의 ∂Γ_n 은 원점에서 나가는
    반직선을 따라 gamma_value = K_n 이 되는 반지름을 이분법으로 찾습니다.
    반직선 위에서 |z| = 1 까지 K_n 을 넘지 않으면 단위원 위의 점을 씁니다.
    """
    if count < 1:
        raise DomainError(f"sample count must be positive, got {count}")
    thetas = _sample_thetas(count)
    if spec.is_limit:
        return boundary_points(thetas)
    directions = np.exp(1j * thetas)
    lo = np.zeros(count)
    hi = np.ones(count)
    inside_at_one = gamma_values(directions, spec) <= spec.K
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        inside = gamma_values(mid * directions, spec) <= spec.K
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    radii = np.where(inside_at_one, 1.0, lo)
    return radii * directions


def check_boundary_identity(count: int = BOUNDARY_SAMPLES, tol: float = CURVE_IDENTITY_TOL) -> bool:
    """모든 극한 곡선 표본이 |z|/|1+z^2| = 1/2, |z| <= 1 을 만족하는지"""
    z = boundary_points(_sample_thetas(count))
    ratio = np.abs(z) / np.abs(1 + z * z)
    return bool(np.all(np.abs(ratio - 0.5) < tol) and np.all(np.abs(z) <= 1 + tol))


def no_roots_in_gamma(rs: RootSet, tol: float = BOUNDARY_TOL) -> GammaReport:
    """
    어떤 근도 Γ_n 안에 있지 않은지 검사합니다.
    min_margin 은 |z| <= 1 인 근에 대한 gamma_value - K_n 의 최솟값입니다.

    Raises:
        DomainError: n < 2 인 경우
    """
    spec = CurveSpec.for_degree(rs.n)
    min_margin = math.inf
    violations = []
    for z in rs.roots:
        if abs(z) > 1.0:
            continue
        margin = gamma_value(z, spec) - spec.K
        min_margin = min(min_margin, margin)
        if margin <= -tol:
            violations.append(z)
    return GammaReport(rs.n, spec.K, min_margin, tuple(violations))


def _distance_to_curve(z: complex, samples: np.ndarray, thetas: np.ndarray) -> float:
    """표본 최근접점 주변에서 θ 를 국소 최적화해 곡선까지의 거리를 구합니다"""
    distances = np.abs(samples - z)
    j = int(np.argmin(distances))
    step = thetas[1] - thetas[0] if len(thetas) > 1 else TWO_PI
    result = minimize_scalar(
        lambda t: abs(boundary_point(t) - z),
        bounds=(thetas[j] - step, thetas[j] + step),
        method="bounded",
        options={"xatol": 1e-13},
    )
    return float(min(distances[j], result.fun))


def greedy_match_distance(roots: Sequence[complex], targets: Sequence[complex]) -> float:
    """
    전역 최근접 쌍부터 차례로 짝지은 탐욕 매칭의 최대 거리.
    동률은 (근 인덱스, 목표 인덱스) 순으로 결정됩니다.
    """
    a = np.asarray(roots, dtype=complex)
    b = np.asarray(targets, dtype=complex)
    if not len(a) or not len(b):
        return 0.0
    distances = np.abs(a[:, None] - b[None, :])
    order = np.argsort(distances, axis=None, kind="stable")
    used_a = np.zeros(len(a), dtype=bool)
    used_b = np.zeros(len(b), dtype=bool)
    worst = 0.0
    matched = 0
    for flat in order:
        i, j = divmod(int(flat), len(b))
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = used_b[j] = True
        worst = max(worst, float(distances[i, j]))
        matched += 1
        if matched == min(len(a), len(b)):
            break
    return worst


def convergence_metrics(rs: RootSet, samples: int = BOUNDARY_SAMPLES) -> ConvergenceReport:
    """
    근이 극한 곡선 ∂Γ 로 수렴하는 정도.

    Returns:
        hausdorff_to_curve: 비자명근에서 ∂Γ 까지 거리의 최댓값
        max_match_to_zm: 근과 z_m 의 탐욕 매칭 최대 거리
        fill_gap: 곡선 표본에서 가장 가까운 근까지 거리의 최댓값

    Raises:
        DomainError: n < 3 인 경우
    """
    if rs.n < 3:
        raise DomainError(f"convergence metrics need n >= 3, got {rs.n}")
    thetas = _sample_thetas(samples)
    curve = boundary_points(thetas)
    hausdorff = max((_distance_to_curve(z, curve, thetas) for z in rs.nontrivial()), default=0.0)
    match = greedy_match_distance(rs.roots, approximants(rs.n).points)
    roots = np.asarray(rs.roots, dtype=complex)
    fill_gap = float(np.max(np.min(np.abs(curve[:, None] - roots[None, :]), axis=1)))
    return ConvergenceReport(rs.n, hausdorff, match, fill_gap)


def nth_root_modulus(n: int, z: complex) -> float:
    """
    |R_n(z)|^(1/n) 를 로그 스케일로 계산합니다 (큰 계수의 부동소수점 넘침 방지).
    |z| <= t < 1 에서 n 이 커지면 2 에 가까워집니다.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    coeffs = r_poly(n).coeffs
    scale = max(coeffs)
    value = 0j
    for c in reversed(coeffs):
        value = value * z + c / scale
    if value == 0:
        return 0.0
    return math.exp((math.log(scale) + math.log(abs(value))) / n)


class CurveService:
    """경계 표본 수와 허용 오차를 설정에서 받아 곡선 검사를 수행하는 서비스"""

    def __init__(self, boundary_tol: float = BOUNDARY_TOL, samples: int = BOUNDARY_SAMPLES):
        self.boundary_tol = boundary_tol
        self.samples = samples

    def spec(self, n: Optional[int]) -> CurveSpec:
        return CurveSpec.limit() if n is None else CurveSpec.for_degree(n)

    def approximants(self, n: int) -> Approximants:
        return approximants(n)

    def seeds(self, n: int) -> List[complex]:
        """근 계산기의 초기값으로 쓰이는 z_m"""
        return list(approximants(n).points)

    def boundary_samples(self, spec: CurveSpec, count: Optional[int] = None) -> np.ndarray:
        return boundary_samples(spec, count or self.samples)

    def no_roots_in_gamma(self, rs: RootSet) -> GammaReport:
        return no_roots_in_gamma(rs, self.boundary_tol)

    def convergence_metrics(self, rs: RootSet) -> ConvergenceReport:
        return convergence_metrics(rs, self.samples)

    def limit_agreement(self, z: complex) -> bool:
        """in_gamma(z, LIMIT) 와 원판 표현이 일치하거나 z 가 경계 허용 오차 안에 있는지"""
        if in_gamma(z, CurveSpec.limit()) == limit_region_check(z):
            return True
        return abs(gamma_value(z, CurveSpec.limit()) - 0.5) < self.boundary_tol or abs(abs(complex(z)) - 1) < self.boundary_tol
