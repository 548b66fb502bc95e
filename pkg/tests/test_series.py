"""
Tests for the truncated generating-function series
"""
import pytest

from src.core.errors import DomainError
from src.models.polynomial import IntPoly
from src.models.series import SeriesZ
from src.services.polynomial_service import p_poly, r_poly
from src.services.series_service import (
    central_binomial_series,
    check_gf_relation,
    check_sqrt_square,
    gf_G_series,
    gf_H_series,
    gf_mismatches,
    sqrt_ratio_series,
)


def test_central_binomial_series():
    assert central_binomial_series(5) == [1, 1, 2, 3, 6, 10]
    assert central_binomial_series(0) == [1]
    assert central_binomial_series(8)[-1] == 70


def test_sqrt_ratio_coefficients():
    s = sqrt_ratio_series(6)
    assert s.coeff(0) == IntPoly.of(1)
    assert s.coeff(1) == IntPoly.of(0, 2)
    assert s.coeff(4) == IntPoly.monomial(4, 6)
    for n in range(1, 7):
        assert s.coeff(n) == IntPoly.monomial(n, 2 * central_binomial_series(n - 1)[-1])


def test_sqrt_ratio_squares_back():
    assert check_sqrt_square(30)


def test_g_and_h_coefficients():
    g = gf_G_series(40)
    h = gf_H_series(40)
    assert g.coeff(0) == IntPoly.of(1)
    assert g.coeff(3) == IntPoly.of(1, 1, 3, 3)
    assert h.coeff(2) == IntPoly.of(2, 1, 1)
    for n in range(41):
        assert g.coeff(n) == p_poly(n), n
        assert h.coeff(n) == r_poly(n), n


def test_g_h_relation():
    assert check_gf_relation(40)
    assert gf_mismatches(20) == []


def test_series_arithmetic_truncates():
    geometric = SeriesZ.geometric(3, IntPoly.of(1))
    one_minus_z = SeriesZ.from_polys(3, [IntPoly.of(1), IntPoly.of(-1)])
    assert geometric * one_minus_z == SeriesZ.constant(3, 1)
    assert len(geometric.coeffs) == 4


def test_series_rejects_mismatched_orders():
    with pytest.raises(DomainError):
        SeriesZ.constant(2, 1) + SeriesZ.constant(3, 1)


def test_exact_halve_detects_odd_coefficients():
    with pytest.raises(DomainError):
        SeriesZ.constant(1, 3).exact_halve()
    assert SeriesZ.constant(1, 4).exact_halve() == SeriesZ.constant(1, 2)


def test_negative_order_rejected():
    with pytest.raises(DomainError):
        sqrt_ratio_series(-1)
