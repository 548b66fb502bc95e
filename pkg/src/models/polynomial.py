"""
Dense univariate integer polynomials and exact rational evaluation points
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from ..core.errors import DomainError


def _strip(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """
    정수 계수 다항식. coeffs[k]가 z^k의 계수 (오름차순), 끝의 0은 항상 제거되며
    영 다항식은 빈 튜플입니다.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise DomainError(f"IntPoly coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        """영 다항식의 차수는 -1"""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        # 차수가 수백 이하이므로 단순 O(d^2) 합성곱
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise DomainError("negative polynomial power")
        result = IntPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """z^k 를 곱한 다항식"""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def compose_square(self) -> "IntPoly":
        """p(z^2)"""
        out = []
        for c in self.coeffs:
            out.extend((c, 0))
        return IntPoly(tuple(out))

    def reverse(self, degree: Optional[int] = None) -> "IntPoly":
        """z^d p(1/z), d 기본값은 현재 차수"""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise DomainError(f"cannot reverse degree-{self.degree} polynomial into degree {d}")
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return IntPoly(tuple(reversed(padded)))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        """내용(content)으로 나누고 최고차 계수를 양수로 맞춘 다항식"""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def evaluate(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        """정확한 Horner 평가"""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reduce_mod(self, p: int) -> Tuple[int, ...]:
        """F_p 위로 내린 계수 (끝의 0 제거)"""
        return _strip([c % p for c in self.coeffs])

    def to_list(self) -> list:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}z")
            else:
                terms.append(f"{c}z^{k}")
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPoly.constant(value)
    raise TypeError(f"cannot combine IntPoly with {type(value).__name__}")


ONE = IntPoly.of(1)
ONE_PLUS_Z = IntPoly.of(1, 1)


@dataclass(frozen=True)
class RationalPoint:
    """기약분수 형태의 정확한 평가점 (den > 0, gcd(num, den) = 1)"""
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise DomainError("rational point with zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def of(cls, value: Union[int, Fraction]) -> "RationalPoint":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)
