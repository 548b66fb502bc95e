"""
Polynomial Service
P_n, R_n, q_n, U_2m 의 정확한 생성, 점화식/항등식 검증, 정확한 나눗셈과 GCD
"""
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from ..core.constants import EXTENDED_RECURSION_N_MAX
from ..core.errors import DomainError, RemainderError, ZeroPolynomialError
from ..models.polynomial import IntPoly, RationalPoint
from .combinatorics_service import central_binomial, pascalian_number


ONE_PLUS_X_SQUARED = IntPoly.of(1, 0, 1)
ONE_MINUS_X = IntPoly.of(1, -1)
ONE_PLUS_X = IntPoly.of(1, 1)


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")


def _require_positive(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")


@lru_cache(maxsize=1024)
def p_poly(n: int) -> IntPoly:
    """P_n(z) = sum_k <n k> z^(n-k); z^j 의 계수는 C(n, floor(j/2))"""
    _require_nonnegative(n)
    return IntPoly(tuple(pascalian_number(n, n - j) for j in range(n + 1)))


@lru_cache(maxsize=1024)
def r_poly(n: int) -> IntPoly:
    """R_n(x) = sum_k <n k> x^k, P_n 의 역순 다항식"""
    _require_nonnegative(n)
    return IntPoly(tuple(pascalian_number(n, k) for k in range(n + 1)))


@lru_cache(maxsize=1024)
def q_poly(n: int) -> IntPoly:
    """잘린 이항 다항식 q_n(z) = sum_{k <= n/2} C(n,k) z^k"""
    _require_nonnegative(n)
    return IntPoly(tuple(comb(n, k) for k in range(n // 2 + 1)))


@lru_cache(maxsize=256)
def u_poly(m: int) -> IntPoly:
    """
    U_2m(z) = 1 + sum_{k=1..m} (<2m, 2m-2k> - <2m, 2m-2k+1>) z^k.
    (1-z)P_2m(z) = U_2m(z^2) - <2m,0> z^(2m+1) 을 만족하며 계수는 모두 양수입니다.
    """
    _require_positive(m)
    n = 2 * m
    coeffs = [1]
    for k in range(1, m + 1):
        coeffs.append(pascalian_number(n, n - 2 * k) - pascalian_number(n, n - 2 * k + 1))
    return IntPoly(tuple(coeffs))


def check_r_recursion(n: int) -> bool:
    """x·R_n(x) = (x^2+1)R_{n-1}(x) + <n-1,0>(x-1)  (1/x 항을 x 곱으로 소거)"""
    _require_positive(n)
    lhs = r_poly(n).shift(1)
    rhs = ONE_PLUS_X_SQUARED * r_poly(n - 1) + IntPoly.of(-1, 1) * central_binomial(n - 1)
    return lhs == rhs


def check_p_recursion(n: int) -> bool:
    """P_n = (1+x^2)P_{n-1} + <n-1,0>(1-x)x^n"""
    _require_positive(n)
    rhs = ONE_PLUS_X_SQUARED * p_poly(n - 1) + (ONE_MINUS_X * central_binomial(n - 1)).shift(n)
    return p_poly(n) == rhs


def extended_recursion_rhs(n: int, k: int) -> IntPoly:
    """(1+x^2)^k P_{n-k} + (1-x) sum_{j<k} <n-j-1,0>(1+x^2)^j x^(n-j)"""
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must lie in [1, {n - 1}], got {k}")
    tail = IntPoly()
    power = IntPoly.of(1)
    for j in range(k):
        tail = tail + (power * central_binomial(n - j - 1)).shift(n - j)
        power = power * ONE_PLUS_X_SQUARED
    # 루프가 끝나면 power = (1+x^2)^k
    return power * p_poly(n - k) + ONE_MINUS_X * tail


def check_extended_recursion(n: int, k: int) -> bool:
    """
    P_n 을 P_{n-k} 로 표현하는 확장 점화식의 정확한 검증.

    Raises:
        DomainError: k가 [1, n-1] 밖인 경우
    """
    return p_poly(n) == extended_recursion_rhs(n, k)


def check_two_step_recursion(n: int) -> bool:
    """k=2 형태: P_n = (1+z^2)^2 P_{n-2} + (1-z)z^(n-1)(<n-1,0>z + <n-2,0>(1+z^2))"""
    if n < 3:
        raise DomainError(f"two-step recursion needs n >= 3, got {n}")
    bracket = IntPoly.of(0, central_binomial(n - 1)) + ONE_PLUS_X_SQUARED * central_binomial(n - 2)
    rhs = ONE_PLUS_X_SQUARED * ONE_PLUS_X_SQUARED * p_poly(n - 2) + (ONE_MINUS_X * bracket).shift(n - 1)
    return p_poly(n) == rhs


def check_linear_decomposition(n: int) -> bool:
    """P_n = (2x)^n + (1-x) sum_{j<n} <n-j-1,0> P_j x^(n-j-1)"""
    _require_positive(n)
    acc = IntPoly()
    for j in range(n):
        acc = acc + (p_poly(j) * central_binomial(n - j - 1)).shift(n - j - 1)
    return p_poly(n) == IntPoly.monomial(n, 2 ** n) + ONE_MINUS_X * acc


def check_binomial_identity(n: int) -> bool:
    """P_n(x) + x^(n+1) R_n(x) = (1+x)(1+x^2)^n"""
    _require_nonnegative(n)
    return p_poly(n) + r_poly(n).shift(n + 1) == ONE_PLUS_X * ONE_PLUS_X_SQUARED ** n


def check_u_identity(m: int) -> bool:
    """(1-z)P_2m(z) = U_2m(z^2) - <2m,0> z^(2m+1)"""
    lhs = ONE_MINUS_X * p_poly(2 * m)
    rhs = u_poly(m).compose_square() - IntPoly.monomial(2 * m + 1, central_binomial(2 * m))
    return lhs == rhs


def check_q_decomposition(n: int) -> bool:
    """
    홀수 n: P_n = (1+z) q_n(z^2).
    짝수 n: P_n = (1+z) q'_n(z^2) + <n,0> z^n, 여기서 q'_n 은 최고차항 C(n, n/2) 를 뺀 q_n.
    """
    _require_nonnegative(n)
    q = q_poly(n)
    if n % 2:
        return p_poly(n) == ONE_PLUS_X * q.compose_square()
    truncated = IntPoly(q.coeffs[:-1])
    return p_poly(n) == ONE_PLUS_X * truncated.compose_square() + IntPoly.monomial(n, central_binomial(n))


def is_weakly_increasing(p: IntPoly) -> bool:
    """계수가 차수 순으로 단조 비감소인지 (에네스트룀-가케야 조건)"""
    return all(a <= b for a, b in zip(p.coeffs, p.coeffs[1:]))


def _divmod_rational(a: IntPoly, b: IntPoly) -> Tuple[List[Fraction], List[Fraction]]:
    if b.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    remainder = [Fraction(c) for c in a.coeffs]
    if a.degree < b.degree:
        return [], remainder
    quotient = [Fraction(0)] * (a.degree - b.degree + 1)
    lead = b.leading
    for shift in range(a.degree - b.degree, -1, -1):
        factor = remainder[shift + b.degree] / lead
        quotient[shift] = factor
        if factor:
            for i, c in enumerate(b.coeffs):
                remainder[shift + i] -= factor * c
    remainder = remainder[: b.degree]
    while remainder and remainder[-1] == 0:
        remainder.pop()
    return quotient, remainder


def exact_divide(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    a = b·q 인 정수 계수 q 를 반환합니다.

    Raises:
        ZeroPolynomialError: b가 영 다항식인 경우
        RemainderError: 나머지가 0이 아니거나 몫이 정수 계수가 아닌 경우 (remainder 속성에 나머지)
    """
    quotient, remainder = _divmod_rational(a, b)
    if remainder:
        raise RemainderError(f"{a} is not divisible by {b}", remainder=remainder)
    if any(c.denominator != 1 for c in quotient):
        raise RemainderError(f"quotient of {a} by {b} is not integral", remainder=())
    return IntPoly(tuple(int(c) for c in quotient))


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """lc(b) 배수 소거로 얻은 의사 나머지 (매 단계 content 로 나눠 계수 성장을 억제)"""
    r = a
    lead = b.leading
    while not r.is_zero() and r.degree >= b.degree:
        r = r * lead - (b * r.leading).shift(r.degree - b.degree)
        if not r.is_zero():
            g = r.content()
            r = IntPoly(tuple(c // g for c in r.coeffs))
    return r


def gcd_primitive(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    유리수체 위의 GCD 를 원시(content 1)·양의 최고차 계수 형태로 반환합니다.
    분수 없는 유클리드 호제법 (원시 PRS).

    Raises:
        DomainError: 두 다항식이 모두 0인 경우
    """
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, _pseudo_remainder(a, b).primitive_part()
    return a.primitive_part()


def eval_rational(p: IntPoly, x: RationalPoint) -> Fraction:
    """유리수 점에서의 정확한 Horner 평가 (기약분수)"""
    return Fraction(p.evaluate(x.as_fraction()))


class PolynomialService:
    """
    다항식 생성과 정확한 항등식 검증을 묶은 서비스 클래스
    모든 메서드는 순수 함수이며 스레드 안전합니다.
    """

    p_poly = staticmethod(p_poly)
    r_poly = staticmethod(r_poly)
    q_poly = staticmethod(q_poly)
    u_poly = staticmethod(u_poly)
    check_r_recursion = staticmethod(check_r_recursion)
    check_p_recursion = staticmethod(check_p_recursion)
    check_extended_recursion = staticmethod(check_extended_recursion)
    check_two_step_recursion = staticmethod(check_two_step_recursion)
    check_linear_decomposition = staticmethod(check_linear_decomposition)
    check_binomial_identity = staticmethod(check_binomial_identity)
    check_u_identity = staticmethod(check_u_identity)
    check_q_decomposition = staticmethod(check_q_decomposition)
    exact_divide = staticmethod(exact_divide)
    gcd_primitive = staticmethod(gcd_primitive)
    eval_rational = staticmethod(eval_rational)
    is_weakly_increasing = staticmethod(is_weakly_increasing)

    def recursion_failures(self, n_max: int) -> List[str]:
        """
        n <= n_max 범위에서 실패한 점화식/항등식 검사 목록 (비어 있으면 통과).
        확장 점화식은 n <= EXTENDED_RECURSION_N_MAX 까지 모든 k 에 대해 검사합니다.
        """
        failures = []
        for n in range(1, n_max + 1):
            if not check_r_recursion(n):
                failures.append(f"r_recursion n={n}")
            if not check_p_recursion(n):
                failures.append(f"p_recursion n={n}")
            if not check_linear_decomposition(n):
                failures.append(f"linear_decomposition n={n}")
            if not is_weakly_increasing(p_poly(n)):
                failures.append(f"weakly_increasing n={n}")
            if n > EXTENDED_RECURSION_N_MAX:
                continue
            for k in range(1, n):
                if not check_extended_recursion(n, k):
                    failures.append(f"extended_recursion n={n} k={k}")
        for n in range(0, n_max + 1):
            if not check_binomial_identity(n):
                failures.append(f"binomial_identity n={n}")
            if not check_q_decomposition(n):
                failures.append(f"q_decomposition n={n}")
            if n >= 3 and not check_two_step_recursion(n):
                failures.append(f"two_step_recursion n={n}")
        for m in range(1, n_max // 2 + 1):
            if not check_u_identity(m):
                failures.append(f"u_identity m={m}")
        return failures

    def gcd_failures(self, n_max: int) -> List[str]:
        """gcd(P_n, P_{n-2}) 는 홀수 n 이면 1+z, 짝수 n 이면 1"""
        failures = []
        for n in range(3, n_max + 1):
            expected = ONE_PLUS_X if n % 2 else IntPoly.of(1)
            g = gcd_primitive(p_poly(n), p_poly(n - 2))
            if g != expected:
                failures.append(f"gcd(P_{n}, P_{n - 2}) = {g}")
        return failures
