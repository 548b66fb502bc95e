"""
Tests for Pascalian numbers, domino tableaux, lattice walks and the bijection φ
"""
from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainError, ResourceError
from src.models.combinatorics import Tableau, Walk
from src.services.combinatorics_service import (
    CombinatoricsService,
    central_binomial,
    partial_shapes,
    pascalian_number,
    phi,
    phi_inverse,
    shape_of,
    squares_sum,
    tableau_rows,
    triangle_entries,
    triangle_row,
    walk_height,
)

SMALL_ROWS = [[1], [1, 1], [2, 1, 1], [3, 3, 1, 1], [6, 4, 4, 1, 1], [10, 10, 5, 5, 1, 1]]


def test_triangle_rows_match_sorted_pascal():
    assert [triangle_row(n) for n in range(6)] == SMALL_ROWS


def test_rows_are_sorted_binomial_rows():
    for n in range(15):
        assert triangle_row(n) == sorted((comb(n, k) for k in range(n + 1)), reverse=True)


def test_pascalian_number_rejects_out_of_range():
    with pytest.raises(DomainError):
        pascalian_number(3, 4)
    with pytest.raises(DomainError):
        pascalian_number(-1, 0)
    with pytest.raises(ValueError):
        pascalian_number(2, -1)


def test_central_binomial_values():
    assert [central_binomial(n) for n in range(9)] == [1, 1, 2, 3, 6, 10, 20, 35, 70]


def test_triangle_entries_carry_indices():
    entries = triangle_entries(3)
    assert [(e.n, e.k, e.value) for e in entries] == [(3, 0, 3), (3, 1, 3), (3, 2, 1), (3, 3, 1)]
    assert entries[0].to_dict() == {"n": 3, "k": 0, "value": 3}


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_identities(n):
    service = CombinatoricsService(enumeration_cap=12)
    row = triangle_row(n)
    assert len(service.enumerate_tableaux(n)) == 2 ** n
    assert len(service.enumerate_walks(n)) == 2 ** n
    assert squares_sum(row) == comb(2 * n, n)
    assert service.height_histogram(n) == row
    assert service.shape_histogram(n) == row
    assert service.up_step_histogram(n) == [comb(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(0, 13))
def test_bijection_holds(n):
    assert CombinatoricsService(enumeration_cap=12).check_bijection(n)


def test_bijection_rows_for_two_dominos():
    rows = CombinatoricsService().bijection_rows(2)
    assert len(rows) == 4
    assert sorted(row["height"] for row in rows) == [0, 0, 1, 2]
    assert all(row["ok"] for row in rows)
    assert [row["subset"] for row in rows] == ["{}", "{1}", "{1,2}", "{2}"]


def test_enumeration_cap_is_enforced():
    service = CombinatoricsService(enumeration_cap=4)
    with pytest.raises(ResourceError) as info:
        service.enumerate_tableaux(5)
    assert info.value.requested == 5
    assert info.value.cap == 4


def test_subsets_of_size_counts():
    service = CombinatoricsService()
    for k in range(6):
        assert len(service.subsets_of_size(5, k)) == comb(5, k)


def test_tableau_rejects_labels_outside_range():
    with pytest.raises(DomainError):
        Tableau.of(3, [4])


def test_walk_parsing():
    walk = Walk.from_string("UDDU")
    assert walk.bits() == "1001"
    assert str(Walk.from_string("1001")) == "UDDU"
    assert walk.prefix_heights() == (1, 0, -1, 0)
    assert walk_height(walk) == 1
    assert walk_height(Walk.from_string("DD")) == 0
    with pytest.raises(DomainError):
        Walk.from_string("UXD")


def test_tableau_rows_example():
    # 1 가로(첫 줄), 2 가로(둘째 줄), 3 세로
    tableau = Tableau.of(3, [1])
    assert tableau_rows(tableau) == ([1, 1, 3], [2, 2, 3])
    assert shape_of(tableau) == (3, 3)


@st.composite
def tableaux(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    subset = draw(st.sets(st.integers(1, n), max_size=n)) if n else set()
    return Tableau.of(n, subset)


@given(tableaux())
@settings(max_examples=200)
def test_tableau_rows_are_standard(tableau):
    row1, row2 = tableau_rows(tableau)
    assert (len(row1), len(row2)) == shape_of(tableau)
    assert len(row1) >= len(row2)
    assert row1 == sorted(row1) and row2 == sorted(row2)
    for top, bottom in zip(row1, row2):
        assert top <= bottom


@given(tableaux())
@settings(max_examples=200)
def test_partial_shapes_track_walk_height(tableau):
    for i, (row1, row2) in enumerate(partial_shapes(tableau), start=1):
        prefix = Tableau.of(i, [s for s in tableau.subset if s <= i])
        assert row1 + row2 == 2 * i
        assert row2 + walk_height(phi(prefix)) == i


@given(tableaux())
@settings(max_examples=200)
def test_phi_statistics(tableau):
    walk = phi(tableau)
    row1, row2 = shape_of(tableau)
    assert walk.up_count == len(tableau.subset)
    assert walk_height(walk) == (row1 - row2) // 2
    assert phi_inverse(walk) == tableau


@given(st.integers(0, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
@settings(max_examples=200)
def test_phi_inverse_is_right_inverse(args):
    n, mask = args
    walk = Walk.from_mask(n, mask)
    assert phi(phi_inverse(walk)) == walk


def test_heights_over_all_walks_are_triangle_row():
    walks = CombinatoricsService().enumerate_walks(6)
    counts = Counter(walk_height(w) for w in walks)
    assert [counts[k] for k in range(7)] == triangle_row(6)
