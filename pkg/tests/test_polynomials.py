"""
Tests for P_n, R_n, q_n, U_2m and the exact identities between them
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError, RemainderError, ZeroPolynomialError
from src.models.polynomial import ONE_PLUS_Z, IntPoly, RationalPoint
from src.services.polynomial_service import (
    PolynomialService,
    check_binomial_identity,
    check_extended_recursion,
    check_linear_decomposition,
    check_p_recursion,
    check_q_decomposition,
    check_r_recursion,
    check_two_step_recursion,
    check_u_identity,
    eval_rational,
    exact_divide,
    gcd_primitive,
    is_weakly_increasing,
    p_poly,
    q_poly,
    r_poly,
    u_poly,
)


def test_small_polynomials():
    assert p_poly(0) == IntPoly.of(1)
    assert p_poly(3) == IntPoly.of(1, 1, 3, 3)
    assert r_poly(2) == IntPoly.of(2, 1, 1)
    assert r_poly(3) == IntPoly.of(3, 3, 1, 1)
    assert q_poly(9) == IntPoly.of(1, 9, 36, 84, 126)
    assert q_poly(0) == IntPoly.of(1)


def test_r_is_reverse_of_p():
    for n in range(30):
        assert r_poly(n) == p_poly(n).reverse()


def test_u_poly_coefficients():
    assert u_poly(1) == IntPoly.of(1, 1)
    # (1-z)P_4 = 1 + 3z^2 + 2z^4 - 6z^5
    assert u_poly(2) == IntPoly.of(1, 3, 2)
    for m in range(1, 40):
        assert all(c > 0 for c in u_poly(m).coeffs)


def test_u_poly_rejects_zero():
    with pytest.raises(DomainError):
        u_poly(0)


def test_recursions_through_120():
    for n in range(1, 121):
        assert check_r_recursion(n), n
        assert check_p_recursion(n), n
    for n in range(0, 121):
        assert check_binomial_identity(n), n


def test_linear_decomposition_through_60():
    for n in range(1, 61):
        assert check_linear_decomposition(n), n


@pytest.mark.parametrize("n,k", [(2, 1), (9, 4), (15, 14), (20, 7)])
def test_extended_recursion_examples(n, k):
    assert check_extended_recursion(n, k)


@pytest.mark.slow
def test_extended_recursion_all_k_through_40():
    for n in range(2, 41):
        for k in range(1, n):
            assert check_extended_recursion(n, k), (n, k)


@pytest.mark.parametrize("k", [0, 5, -1])
def test_extended_recursion_rejects_k(k):
    with pytest.raises(DomainError):
        check_extended_recursion(5, k)


def test_two_step_and_decompositions():
    for n in range(3, 50):
        assert check_two_step_recursion(n), n
    for n in range(0, 50):
        assert check_q_decomposition(n), n
    for m in range(1, 61):
        assert check_u_identity(m), m


def test_two_step_needs_three():
    with pytest.raises(DomainError):
        check_two_step_recursion(2)


def test_coefficients_weakly_increase():
    for n in range(0, 60):
        assert is_weakly_increasing(p_poly(n))
        assert p_poly(n).coeff(0) == 1
    assert not is_weakly_increasing(IntPoly.of(3, 1))


def test_eval_rational():
    for n in range(0, 40):
        assert eval_rational(p_poly(n), RationalPoint(1)) == 2 ** n
    assert eval_rational(p_poly(2), RationalPoint(1, 2)) == Fraction(2)
    assert eval_rational(p_poly(3), RationalPoint(-1)) == 0
    assert RationalPoint(2, -4) == RationalPoint(-1, 2)


def test_exact_divide_odd_factor():
    assert exact_divide(p_poly(3), ONE_PLUS_Z) == IntPoly.of(1, 0, 3)
    assert exact_divide(IntPoly(), ONE_PLUS_Z) == IntPoly()


def test_exact_divide_reports_remainder():
    with pytest.raises(RemainderError) as info:
        exact_divide(p_poly(4), ONE_PLUS_Z)
    # P_4(-1) = 6
    assert info.value.remainder == (Fraction(6),)


def test_exact_divide_rejects_non_integral_quotient():
    with pytest.raises(RemainderError):
        exact_divide(IntPoly.of(2), IntPoly.of(4))


def test_exact_divide_by_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        exact_divide(p_poly(2), IntPoly())
    with pytest.raises(ZeroDivisionError):
        exact_divide(p_poly(2), IntPoly())


def test_gcd_with_second_predecessor():
    for n in range(3, 61):
        expected = ONE_PLUS_Z if n % 2 else IntPoly.of(1)
        assert gcd_primitive(p_poly(n), p_poly(n - 2)) == expected, n


def test_gcd_edge_cases():
    with pytest.raises(DomainError):
        gcd_primitive(IntPoly(), IntPoly())
    assert gcd_primitive(IntPoly(), IntPoly.of(-2, -4)) == IntPoly.of(1, 2)
    assert gcd_primitive(IntPoly.of(-1, 0, 1), IntPoly.of(2, 2)) == ONE_PLUS_Z


def test_service_failure_lists_are_empty():
    service = PolynomialService()
    assert service.recursion_failures(12) == []
    assert service.gcd_failures(20) == []


small_polys = st.lists(st.integers(-20, 20), max_size=8).map(lambda cs: IntPoly(tuple(cs)))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=150)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert a * b == b * a


@given(small_polys, small_polys, st.integers(-5, 5))
@settings(max_examples=150)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert a.compose_square().evaluate(x) == a.evaluate(x * x)


@given(small_polys, small_polys)
@settings(max_examples=150)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
@settings(max_examples=150)
def test_exact_divide_recovers_factor(a, b):
    assert exact_divide(a * b, b) == a


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
@settings(max_examples=100)
def test_gcd_divides_both(a, b):
    g = gcd_primitive(a, b)
    for p in (a, b):
        if not p.is_zero():
            assert exact_divide(p, g) * g == p
