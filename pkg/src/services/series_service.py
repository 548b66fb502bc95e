"""
Series Service
P_n, R_n 생성함수의 형식적 멱급수 검증 (z^(N+1) 절단, 정수 계수)
"""
from typing import List

from ..core.errors import DomainError
from ..models.polynomial import IntPoly
from ..models.series import SeriesZ
from .combinatorics_service import central_binomial
from .polynomial_service import p_poly, r_poly

X = IntPoly.of(0, 1)
ONE_PLUS_X_SQUARED = IntPoly.of(1, 0, 1)


def _require_order(order: int) -> None:
    if order < 0:
        raise DomainError(f"series order must be nonnegative, got {order}")


def central_binomial_series(order: int) -> List[int]:
    """<n,0> = C(n, floor(n/2)), n = 0..order"""
    _require_order(order)
    return [central_binomial(n) for n in range(order + 1)]


def sqrt_ratio_series(order: int) -> SeriesZ:
    """
    sqrt((1+2xz)/(1-2xz)) 의 형식적 전개 (상수항 +1 분기).

    F = (1+2xz)/(1-2xz) 를 먼저 전개한 뒤 S^2 = F 를 차수별로 풉니다:
    S_n = (F_n - sum_{0<j<n} S_j S_{n-j}) / 2. 나눗셈은 항상 정확해야 합니다.
    """
    _require_order(order)
    two_x = X * 2
    ratio = SeriesZ.geometric(order, two_x) * SeriesZ.from_polys(order, [IntPoly.of(1), two_x])
    terms: List[IntPoly] = [IntPoly.of(1)]
    for n in range(1, order + 1):
        acc = ratio.coeff(n)
        for j in range(1, n):
            acc = acc - terms[j] * terms[n - j]
        if any(c % 2 for c in acc.coeffs):
            raise DomainError(f"square-root coefficient of z^{n} is not integral: {acc}")
        terms.append(IntPoly(tuple(c // 2 for c in acc.coeffs)))
    return SeriesZ.from_polys(order, terms)


def gf_G_series(order: int) -> SeriesZ:
    """
    G(x,z) = (2 + (x-1)(1-S)) / (2(1 - z(1+x^2))).
    분자를 정수 급수로 만든 뒤 짝수성을 확인하며 2로 나누고, (1+x^2) 기하급수를 곱합니다.
    """
    _require_order(order)
    s = sqrt_ratio_series(order)
    one = SeriesZ.constant(order, 1)
    numerator = SeriesZ.constant(order, 2) + (one - s) * IntPoly.of(-1, 1)
    return numerator.exact_halve() * SeriesZ.geometric(order, ONE_PLUS_X_SQUARED)


def gf_H_series(order: int) -> SeriesZ:
    """H(x,z) = G(1/x, xz): z^n 계수는 x^n G_n(1/x), 즉 차수 n 으로 맞춘 역순 다항식"""
    g = gf_G_series(order)
    return SeriesZ.from_polys(order, [g.coeff(n).reverse(n) for n in range(order + 1)])


def check_sqrt_square(order: int) -> bool:
    """S^2·(1-2xz) - (1+2xz) ≡ 0 mod z^(order+1)"""
    s = sqrt_ratio_series(order)
    lhs = s * s * SeriesZ.from_polys(order, [IntPoly.of(1), X * -2])
    return (lhs - SeriesZ.from_polys(order, [IntPoly.of(1), X * 2])).is_zero()


def check_gf_relation(order: int) -> bool:
    """G(x,z) + x·H(x,xz) = (1+x)/(1-z(1+x^2)) mod z^(order+1)"""
    g = gf_G_series(order)
    h = gf_H_series(order).scale_z(X) * X
    rhs = SeriesZ.geometric(order, ONE_PLUS_X_SQUARED) * IntPoly.of(1, 1)
    return (g + h - rhs).is_zero()


def gf_mismatches(order: int) -> List[str]:
    """G, H 계수와 p_poly / r_poly 를 비교한 불일치 목록"""
    g = gf_G_series(order)
    h = gf_H_series(order)
    failures = []
    for n in range(order + 1):
        if g.coeff(n) != p_poly(n):
            failures.append(f"G coefficient z^{n}")
        if h.coeff(n) != r_poly(n):
            failures.append(f"H coefficient z^{n}")
    if not check_gf_relation(order):
        failures.append(f"G + xH relation to z^{order}")
    if not check_sqrt_square(order):
        failures.append(f"square-root series to z^{order}")
    return failures
