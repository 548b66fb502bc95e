"""
Root-free regions Γ_n, the limit curve and convergence reports
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core.constants import LIMIT_K
from ..core.errors import DomainError


@dataclass(frozen=True)
class CurveSpec:
    """
    Γ_n 영역의 매개변수. n이 None이면 극한 곡선 Γ (K = 1/2)를 뜻합니다.
    """
    n: Optional[int]
    K: float

    @classmethod
    def for_degree(cls, n: int) -> "CurveSpec":
        if n < 2:
            raise DomainError(f"Γ_n is defined for n >= 2, got {n}")
        return cls(n, (n * n - 1) / (2 * n * n))

    @classmethod
    def limit(cls) -> "CurveSpec":
        return cls(None, LIMIT_K)

    @property
    def is_limit(self) -> bool:
        return self.n is None

    def label(self) -> str:
        return "LIMIT" if self.is_limit else str(self.n)


@dataclass(frozen=True)
class Approximants:
    """2z/(1+z^2) = e^{2πim/n} 의 |z| <= 1 해 z_m (m = 1..n)"""
    n: int
    points: Tuple[complex, ...]


@dataclass(frozen=True)
class GammaReport:
    """Γ_n 안에 근이 없는지에 대한 검사 결과"""
    n: int
    K: float
    min_margin: float
    violations: Tuple[complex, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "min_margin": _finite_or_none(self.min_margin),
            "violations": [[z.real, z.imag] for z in self.violations],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ConvergenceReport:
    """근과 극한 곡선 사이의 거리 지표"""
    n: int
    hausdorff_to_curve: float
    max_match_to_zm: float
    fill_gap: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "hausdorff_to_curve": self.hausdorff_to_curve,
            "max_match_to_zm": self.max_match_to_zm,
            "fill_gap": self.fill_gap,
        }


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None
