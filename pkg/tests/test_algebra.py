"""
Tests for factorization witnesses, irreducibility certificates and rational roots
"""
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import DomainError
from src.models.polynomial import ONE_PLUS_Z, IntPoly
from src.services.algebra_service import (
    AlgebraService,
    binomial_factorization,
    check_identity_mod_p,
    common_root_scan,
    conjecture_scan,
    factor_odd,
    irreducible_mod_p,
    is_perfect_square,
    pascalian_rational_roots,
    q_square_criterion,
    rational_roots,
)
from src.services.galois import gf_gcd, gf_irreducible_rabin, gf_mul, gf_rem, is_prime, prime_factors
from src.services.polynomial_service import p_poly, q_poly


def _rem_mod_p(f, g, p):
    """나머지 (오라클용 독립 구현, g는 모닉)"""
    f = list(f)
    while len(f) >= len(g):
        c = f[-1] % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        f.pop()
    return [c % p for c in f]


def _has_factor_mod_p(f, p):
    """차수 1..d/2 의 모든 모닉 다항식으로 나눠보는 전수 탐색"""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for tail in product(range(p), repeat=k):
            if not any(_rem_mod_p(f, list(tail) + [1], p)):
                return True
    return False


def test_factor_odd():
    w = factor_odd(3)
    assert w.checked
    assert w.linear == ONE_PLUS_Z
    assert w.even_part == IntPoly.of(1, 3)
    assert factor_odd(1).even_part == IntPoly.of(1)
    assert factor_odd(9).checked
    with pytest.raises(DomainError):
        factor_odd(4)
    with pytest.raises(DomainError):
        factor_odd(-1)


def test_factor_odd_through_201():
    for n in range(1, 202, 2):
        assert factor_odd(n).checked, n


def test_is_perfect_square():
    assert is_perfect_square(0)
    assert is_perfect_square(1)
    assert is_perfect_square(36)
    assert not is_perfect_square(35)
    assert is_perfect_square(10 ** 40)
    with pytest.raises(DomainError):
        is_perfect_square(-4)


def test_square_criterion_examples():
    r3 = q_square_criterion(3)
    assert (r3.constant, r3.leading) == (1, 3)
    assert r3.constant_is_square and not r3.leading_is_square
    assert r3.reducibility_excluded
    assert "irreducible" in r3.note

    r0 = q_square_criterion(0)
    assert not r0.reducibility_excluded
    assert r0.note.startswith("degenerate")

    r7 = q_square_criterion(7)
    assert r7.leading == 35 and r7.reducibility_excluded

    r2 = q_square_criterion(2)
    assert r2.p_constant_is_square is True
    assert r2.p_leading_is_square is False
    assert q_square_criterion(3).p_constant_is_square is None


def test_square_criterion_odd_through_1001():
    for m in range(1, 501):
        assert q_square_criterion(2 * m + 1).reducibility_excluded, m


def test_irreducible_mod_p_examples():
    assert irreducible_mod_p(IntPoly.of(1, 0, 1), 3).irreducible_mod_p
    assert not irreducible_mod_p(IntPoly.of(1, 0, 1), 2).irreducible_mod_p
    assert not irreducible_mod_p(IntPoly.of(1, 0, 1), 5).irreducible_mod_p
    cert = irreducible_mod_p(p_poly(2), 3, "P_2")
    assert cert.to_dict() == {"p": 3, "target": "P_2", "degree": 2, "irreducible_mod_p": not _has_factor_mod_p([1, 1, 2], 3)}
    q4 = q_poly(4)
    assert irreducible_mod_p(q4, 5).irreducible_mod_p == (not _has_factor_mod_p([1, 4, 6], 5))


def test_irreducible_mod_p_rejections():
    with pytest.raises(DomainError):
        irreducible_mod_p(p_poly(2), 4)
    with pytest.raises(DomainError):
        irreducible_mod_p(p_poly(2), 2)
    with pytest.raises(DomainError):
        irreducible_mod_p(IntPoly.of(5), 3)


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=8),
    st.integers(min_value=1, max_value=6),
)
def test_rabin_matches_exhaustive_search(p, tail, lead):
    lead = lead % p or 1
    f = [c % p for c in tail] + [lead]
    inverse = pow(lead, -1, p)
    monic = [c * inverse % p for c in f]
    assert gf_irreducible_rabin(f, p) == (not _has_factor_mod_p(monic, p))


def test_galois_helpers():
    assert is_prime(2) and is_prime(97) and not is_prime(1) and not is_prime(91)
    assert prime_factors(360) == {2: 3, 3: 2, 5: 1}
    assert gf_mul([1, 1], [1, 1], 2) == [1, 0, 1]
    assert gf_rem([1, 0, 1], [1, 1], 2) == []
    assert gf_gcd([1, 0, 1], [1, 1], 2) == [1, 1]


def test_conjecture_scan_shape():
    rows = conjecture_scan(20, (3, 5, 7, 11, 13))
    assert [row.n for row in rows] == list(range(2, 21, 2))
    for row in rows:
        if row.certified:
            assert row.certifying_prime in row.primes_tried
            assert irreducible_mod_p(p_poly(row.n), row.certifying_prime).irreducible_mod_p
        assert all(p_poly(row.n).leading % p for p in row.primes_tried)
    with pytest.raises(DomainError):
        conjecture_scan(10, (4,))


def test_service_scan_uses_default_primes():
    service = AlgebraService(max_workers=2, primes=(3, 5))
    rows = service.conjecture_scan(6)
    assert all(set(row.primes_tried) <= {3, 5} for row in rows)


def test_binomial_factorization():
    assert binomial_factorization(6, 3) == {2: 2, 5: 1}
    assert binomial_factorization(10, 5) == {2: 2, 3: 2, 7: 1}
    assert binomial_factorization(4, 0) == {}
    with pytest.raises(DomainError):
        binomial_factorization(3, 5)


def test_rational_roots():
    assert rational_roots(IntPoly.of(-1, 0, 4)) == [Fraction(-1, 2), Fraction(1, 2)]
    assert rational_roots(IntPoly.of(0, 0, 1, 1)) == [Fraction(-1), Fraction(0)]
    assert rational_roots(IntPoly.of(1, 0, 1)) == []
    with pytest.raises(DomainError):
        rational_roots(IntPoly())


def test_pascalian_rational_roots_through_60():
    for n in range(1, 61):
        expected = [Fraction(-1)] if n % 2 else []
        assert pascalian_rational_roots(n) == expected, n


def test_identity_mod_p():
    for p in (2, 3, 5, 7, 11, 101):
        for n in (0, 1, 5, 12):
            assert check_identity_mod_p(n, p)
    with pytest.raises(DomainError):
        check_identity_mod_p(3, 9)


def test_common_root_scan_small():
    assert common_root_scan(8) == []


def test_service_failure_lists_are_empty():
    service = AlgebraService()
    assert service.factor_failures(41) == []
    assert service.algebra_failures(30) == []
