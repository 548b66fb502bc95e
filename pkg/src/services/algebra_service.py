"""
Algebra Service
홀수 n 인수분해, q(z^2) 제곱 판정, F_p 기약성 인증서, 유리근과 공통근 탐색
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.constants import DEFAULT_SCAN_PRIMES, MAX_WORKERS
from ..core.errors import DomainError
from ..models.algebra import ConjectureRow, FactorizationWitness, ModPCertificate, SquareCriterionReport
from ..models.polynomial import ONE_PLUS_Z, IntPoly
from .galois import gf_add, gf_irreducible_rabin, gf_mul, gf_strip, is_prime, prime_factors
from .polynomial_service import exact_divide, gcd_primitive, p_poly, q_poly, r_poly

ASSUMPTION_NOTE = "assumes q_n irreducible over Q (cited, not checked here)"


def factor_odd(n: int) -> FactorizationWitness:
    """
    P_n = (1+z)·q_n(z^2) 를 정확한 나눗셈으로 확인합니다.

    Raises:
        DomainError: n 이 짝수이거나 양수가 아닌 경우
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"factor_odd needs an odd positive n, got {n}")
    quotient = exact_divide(p_poly(n), ONE_PLUS_Z)
    even_part = q_poly(n)
    return FactorizationWitness(n, ONE_PLUS_Z, even_part, quotient == even_part.compose_square())


def is_perfect_square(v: int) -> bool:
    if v < 0:
        raise DomainError(f"perfect-square test needs v >= 0, got {v}")
    return isqrt(v) ** 2 == v


def q_square_criterion(n: int) -> SquareCriterionReport:
    """
    q_n(z^2) 의 상수항/최고차 계수가 모두 제곱수일 때만 가약일 수 있습니다.
    reducibility_excluded 는 둘 중 하나라도 제곱수가 아니면 참입니다 (q_n 기약 가정).
    짝수 n 은 P_n 자신의 계수 쌍을 참고용으로 함께 기록합니다.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    q = q_poly(n)
    constant, leading = q.coeff(0), q.leading
    constant_sq, leading_sq = is_perfect_square(constant), is_perfect_square(leading)
    if q.degree < 1:
        excluded, note = False, "degenerate: q_n is constant"
    else:
        excluded, note = not (constant_sq and leading_sq), ASSUMPTION_NOTE
    p_constant_sq = p_leading_sq = None
    if n % 2 == 0 and n > 0:
        p = p_poly(n)
        p_constant_sq, p_leading_sq = is_perfect_square(p.coeff(0)), is_perfect_square(p.leading)
        note += "; P_n coefficient pair reported outside the q(z^2) hypothesis"
    return SquareCriterionReport(
        n, constant, leading, constant_sq, leading_sq, excluded, note, p_constant_sq, p_leading_sq
    )


def irreducible_mod_p(poly: IntPoly, p: int, target: str = "poly") -> ModPCertificate:
    """
    F_p 위 라빈 판정. 최고차 계수가 p 로 나누어지지 않으면 F_p 위 기약성은
    유리수체 위 기약성을 함의합니다.

    Raises:
        DomainError: p 가 소수가 아니거나, p 가 최고차 계수를 나누거나, 차수가 1 미만인 경우
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if poly.degree < 1:
        raise DomainError(f"irreducibility needs degree >= 1, got {poly.degree}")
    if poly.leading % p == 0:
        raise DomainError(f"p={p} divides the leading coefficient {poly.leading}")
    reduced = list(poly.reduce_mod(p))
    return ModPCertificate(p, target, poly.degree, gf_irreducible_rabin(reduced, p))


def _certify_even(n: int, primes: Sequence[int]) -> ConjectureRow:
    poly = p_poly(n)
    tried = []
    for p in primes:
        if poly.leading % p == 0:
            continue
        tried.append(p)
        if irreducible_mod_p(poly, p, f"P_{n}").irreducible_mod_p:
            return ConjectureRow(n, p, tuple(tried))
    return ConjectureRow(n, None, tuple(tried))


def conjecture_scan(
    n_max: int,
    primes: Sequence[int] = DEFAULT_SCAN_PRIMES,
    max_workers: int = MAX_WORKERS,
) -> List[ConjectureRow]:
    """
    짝수 n <= n_max 마다 P_n 의 F_p 기약성을 인증하는 첫 소수를 찾습니다.
    인증서가 있으면 그 n 에 대해 유리수체 위 기약성이 증명되고, 없으면 아무것도 말하지 않습니다.
    """
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    evens = list(range(2, n_max + 1, 2))
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        rows = list(executor.map(lambda n: _certify_even(n, primes), evens))
    return sorted(rows, key=lambda row: row.n)


def binomial_factorization(n: int, k: int) -> Dict[int, int]:
    """르장드르 공식으로 C(n, k) 의 소인수분해 {p: 지수}"""
    if not 0 <= k <= n:
        raise DomainError(f"C({n},{k}) is not defined")
    out: Dict[int, int] = {}
    for p in range(2, n + 1):
        if not is_prime(p):
            continue
        exponent, power = 0, p
        while power <= n:
            exponent += n // power - k // power - (n - k) // power
            power *= p
        if exponent:
            out[p] = exponent
    return out


def _divisors(factors: Dict[int, int]) -> List[int]:
    primes = list(factors)
    out = []
    for exponents in product(*(range(factors[p] + 1) for p in primes)):
        d = 1
        for p, e in zip(primes, exponents):
            d *= p ** e
        out.append(d)
    return sorted(out)


def rational_roots(poly: IntPoly, leading_factors: Optional[Dict[int, int]] = None) -> List[Fraction]:
    """
    유리근 정리의 후보 ±a/b (a | 상수항, b | 최고차 계수) 를 정확히 평가해 실제 근만 반환합니다.
    leading_factors 로 최고차 계수의 소인수분해를 넘기면 시행 나눗셈을 생략합니다.
    """
    if poly.is_zero():
        raise DomainError("the zero polynomial has every rational number as a root")
    roots: List[Fraction] = []
    low = 0
    while poly.coeff(low) == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
        poly = IntPoly(poly.coeffs[low:])
    if poly.degree < 1:
        return roots
    leading_factors = leading_factors or prime_factors(abs(poly.leading))
    numerators = _divisors(prime_factors(abs(poly.coeff(0))))
    denominators = _divisors(leading_factors)
    d = poly.degree
    seen = set()
    for a in numerators:
        for b in denominators:
            candidate = Fraction(a, b)
            if candidate in seen:
                continue
            seen.add(candidate)
            for sign in (1, -1):
                num, den = sign * candidate.numerator, candidate.denominator
                if _homogeneous_value(poly, num, den) == 0:
                    roots.append(Fraction(num, den))
    return sorted(roots)


def _homogeneous_value(poly: IntPoly, num: int, den: int) -> int:
    """den^d · poly(num/den) 를 정수 Horner 로 계산"""
    acc, den_power = 0, 1
    for c in reversed(poly.coeffs):
        acc = acc * num + c * den_power
        den_power *= den
    return acc


def pascalian_rational_roots(n: int) -> List[Fraction]:
    return rational_roots(p_poly(n), binomial_factorization(n, n // 2))


def common_root_scan(n_max: int) -> List[Tuple[int, int, IntPoly]]:
    """gcd(P_n, P_{n-k}) 가 1 또는 1+z 가 아닌 (n, k) 쌍 목록"""
    expected = (IntPoly.of(1), ONE_PLUS_Z)
    found = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            g = gcd_primitive(p_poly(n), p_poly(n - k))
            if g not in expected:
                found.append((n, k, g))
    return found


def check_identity_mod_p(n: int, p: int) -> bool:
    """F_p 위에서 P_n + z^(n+1) R_n ≡ (1+z)(1+z^2)^n"""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    lhs = gf_add(list(p_poly(n).reduce_mod(p)), gf_mul([0] * (n + 1) + [1], list(r_poly(n).reduce_mod(p)), p), p)
    rhs = gf_strip([1, 1], p)
    for _ in range(n):
        rhs = gf_mul(rhs, gf_strip([1, 0, 1], p), p)
    return lhs == rhs


class AlgebraService:
    """병렬 작업자 수와 기본 소수 목록을 가진 대수 검사 서비스"""

    def __init__(self, max_workers: int = MAX_WORKERS, primes: Sequence[int] = DEFAULT_SCAN_PRIMES):
        self.max_workers = max_workers
        self.primes = tuple(primes)

    def conjecture_scan(self, n_max: int, primes: Optional[Sequence[int]] = None) -> List[ConjectureRow]:
        return conjecture_scan(n_max, primes or self.primes, self.max_workers)

    def factor_failures(self, n_max: int) -> List[str]:
        """홀수 n 인수분해와 q(z^2) 제곱 판정"""
        failures = []
        for n in range(1, n_max + 1, 2):
            if not factor_odd(n).checked:
                failures.append(f"factor_odd n={n}")
            if n >= 3 and not q_square_criterion(n).reducibility_excluded:
                failures.append(f"square criterion n={n}")
        return failures

    def algebra_failures(self, n_max: int) -> List[str]:
        """유리근 (홀수 n 은 -1 하나, 짝수 n 은 없음) 과 F_p 위 이항 항등식"""
        failures = []
        for n in range(1, n_max + 1):
            expected = [Fraction(-1)] if n % 2 else []
            if pascalian_rational_roots(n) != expected:
                failures.append(f"rational roots n={n}")
            for p in self.primes[:4]:
                if not check_identity_mod_p(n, p):
                    failures.append(f"identity mod {p} n={n}")
        return failures
