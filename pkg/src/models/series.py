"""
Truncated power series in z whose coefficients are integer polynomials in x
"""
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from ..core.errors import DomainError
from .polynomial import IntPoly


@dataclass(frozen=True)
class SeriesZ:
    """
    z에 대한 절단 멱급수. coeffs[j]는 z^j의 계수(x에 대한 IntPoly)이며
    모든 연산은 z^(order+1)을 법으로 정확하게 수행됩니다.
    """
    order: int
    coeffs: Tuple[IntPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"series order must be nonnegative, got {self.order}")
        coeffs = tuple(self.coeffs)[: self.order + 1]
        coeffs = coeffs + (IntPoly(),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_polys(cls, order: int, polys: Sequence[IntPoly]) -> "SeriesZ":
        return cls(order, tuple(polys))

    @classmethod
    def constant(cls, order: int, value: Union[IntPoly, int]) -> "SeriesZ":
        value = value if isinstance(value, IntPoly) else IntPoly.constant(value)
        return cls(order, (value,))

    @classmethod
    def geometric(cls, order: int, ratio: IntPoly) -> "SeriesZ":
        """1 / (1 - z·ratio(x)) = sum_j ratio^j z^j"""
        terms = [IntPoly.constant(1)]
        for _ in range(order):
            terms.append(terms[-1] * ratio)
        return cls(order, tuple(terms))

    def coeff(self, j: int) -> IntPoly:
        return self.coeffs[j]

    def _check(self, other: "SeriesZ") -> None:
        if other.order != self.order:
            raise DomainError(f"series orders differ: {self.order} != {other.order}")

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        self._check(other)
        return SeriesZ(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SeriesZ") -> "SeriesZ":
        self._check(other)
        return SeriesZ(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SeriesZ":
        return SeriesZ(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["SeriesZ", IntPoly, int]) -> "SeriesZ":
        if isinstance(other, (IntPoly, int)):
            return SeriesZ(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        out = []
        for j in range(self.order + 1):
            acc = IntPoly()
            for i in range(j + 1):
                a = self.coeffs[i]
                b = other.coeffs[j - i]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return SeriesZ(self.order, tuple(out))

    __rmul__ = __mul__

    def scale_z(self, factor: IntPoly) -> "SeriesZ":
        """F(x, factor(x)·z): z^j 계수에 factor^j를 곱함"""
        out = []
        power = IntPoly.constant(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return SeriesZ(self.order, tuple(out))

    def exact_halve(self) -> "SeriesZ":
        """모든 계수를 2로 나눔. 홀수 계수가 있으면 DomainError"""
        out = []
        for j, c in enumerate(self.coeffs):
            odd = [v for v in c.coeffs if v % 2]
            if odd:
                raise DomainError(f"coefficient of z^{j} is not even: {c}")
            out.append(IntPoly(tuple(v // 2 for v in c.coeffs)))
        return SeriesZ(self.order, tuple(out))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)
