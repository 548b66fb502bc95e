"""
Dense polynomial arithmetic over F_p
계수는 오름차순 리스트이며 끝의 0은 항상 제거됩니다 (영 다항식은 빈 리스트).
"""
from typing import Dict, List, Sequence

from ..core.errors import DomainError, ZeroPolynomialError

GFPoly = List[int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> Dict[int, int]:
    """소인수분해 (시행 나눗셈), n >= 1"""
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def gf_strip(f: Sequence[int], p: int) -> GFPoly:
    out = [c % p for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def gf_degree(f: GFPoly) -> int:
    return len(f) - 1


def gf_add(f: GFPoly, g: GFPoly, p: int) -> GFPoly:
    size = max(len(f), len(g))
    return gf_strip([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(size)], p)


def gf_sub(f: GFPoly, g: GFPoly, p: int) -> GFPoly:
    return gf_add(f, [-c for c in g], p)


def gf_mul(f: GFPoly, g: GFPoly, p: int) -> GFPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return gf_strip(out, p)


def gf_monic(f: GFPoly, p: int) -> GFPoly:
    if not f:
        return []
    inverse = pow(f[-1], -1, p)
    return gf_strip([c * inverse for c in f], p)


def gf_rem(f: GFPoly, g: GFPoly, p: int) -> GFPoly:
    if not g:
        raise ZeroPolynomialError("division by the zero polynomial over F_p")
    r = list(f)
    inverse = pow(g[-1], -1, p)
    dg = gf_degree(g)
    while len(r) - 1 >= dg and r:
        factor = r[-1] * inverse % p
        shift = len(r) - 1 - dg
        for i, c in enumerate(g):
            r[shift + i] = (r[shift + i] - factor * c) % p
        r = gf_strip(r, p)
    return r


def gf_gcd(f: GFPoly, g: GFPoly, p: int) -> GFPoly:
    """모닉 GCD"""
    while g:
        f, g = g, gf_rem(f, g, p)
    return gf_monic(f, p)


def gf_pow_mod(f: GFPoly, exponent: int, modulus: GFPoly, p: int) -> GFPoly:
    """f^exponent mod modulus (반복 제곱)"""
    result: GFPoly = [1]
    base = gf_rem(f, modulus, p)
    while exponent:
        if exponent & 1:
            result = gf_rem(gf_mul(result, base, p), modulus, p)
        base = gf_rem(gf_mul(base, base, p), modulus, p)
        exponent >>= 1
    return gf_rem(result, modulus, p)


def gf_irreducible_rabin(f: GFPoly, p: int) -> bool:
    """
    라빈 판정법: 차수 d 의 f 가 F_p 위에서 기약일 필요충분조건은
    x^(p^d) ≡ x (mod f) 이고 d 의 모든 소인수 r 에 대해 gcd(x^(p^(d/r)) - x, f) = 1.
    """
    d = gf_degree(f)
    if d < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    if d == 1:
        return True
    f = gf_monic(f, p)
    x = [0, 1]
    indices = {d // r for r in prime_factors(d)}
    h = gf_pow_mod(x, p, f, p)
    for i in range(1, d):
        if i in indices and gf_gcd(f, gf_sub(h, x, p), p) != [1]:
            return False
        h = gf_pow_mod(h, p, f, p)
    return h == gf_rem(x, f, p)
