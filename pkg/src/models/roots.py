"""
Root sets of P_n and the reports computed from them
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..core.errors import DomainError


@dataclass(frozen=True)
class RootSet:
    """
    P_n의 전체 근 (중복도 포함 n개)과 근별 정규화 잔차 |P(z)| / sum |c_k||z|^k.
    corrections 는 다중 정밀도로 계산한 뉴턴 보정 |P(z)/P'(z)| (가장 가까운 근까지의 거리 추정)입니다.
    홀수 n이면 trivial_index가 정확히 분리된 근 -1의 위치를 가리킵니다.
    """
    n: int
    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    iterations: int = 0
    trivial_index: Optional[int] = None
    corrections: Tuple[float, ...] = ()

    def __post_init__(self):
        if len(self.roots) != self.n or len(self.residuals) != self.n:
            raise DomainError(f"RootSet for n={self.n} needs {self.n} roots and residuals")
        if self.corrections and len(self.corrections) != self.n:
            raise DomainError(f"RootSet for n={self.n} needs {self.n} Newton corrections")
        for z in self.roots:
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise DomainError(f"non-finite root {z!r} in RootSet n={self.n}")

    @property
    def worst_residual(self) -> float:
        return max(self.residuals, default=0.0)

    @property
    def worst_correction(self) -> float:
        return max(self.corrections, default=0.0)

    def nontrivial(self) -> Tuple[complex, ...]:
        return tuple(z for i, z in enumerate(self.roots) if i != self.trivial_index)

    def norms(self) -> Tuple[float, ...]:
        return tuple(abs(z) for z in self.roots)


@dataclass(frozen=True)
class AnnulusReport:
    """환형 영역 inner < |z| < outer 검사 결과 (자명근 제외)"""
    n: int
    min_norm: float
    max_norm: float
    inner: float
    outer: float
    violations: Tuple[complex, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_norm": _finite_or_none(self.min_norm),
            "max_norm": _finite_or_none(self.max_norm),
            "inner": self.inner,
            "outer": self.outer,
            "violations": [[z.real, z.imag] for z in self.violations],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class VietaReport:
    """근의 합/곱과 계수에서 읽은 기댓값 비교"""
    n: int
    sum: complex
    product: complex
    expected_sum: float
    expected_product: float
    tolerance: float

    @property
    def sum_error(self) -> float:
        return abs(self.sum - self.expected_sum)

    @property
    def product_error(self) -> float:
        return abs(self.product - self.expected_product)

    @property
    def passed(self) -> bool:
        return self.sum_error < self.tolerance and self.product_error < self.tolerance

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "sum": [self.sum.real, self.sum.imag],
            "product": [self.product.real, self.product.imag],
            "expected_sum": self.expected_sum,
            "expected_product": self.expected_product,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None
