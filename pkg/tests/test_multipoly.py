"""Multivariate integer polynomials with nonnegative exponents."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stackzeta import DomainError, MultiPoly

from _strategies import multipolys


def test_construction_rules():
    with pytest.raises(DomainError):
        MultiPoly(2, {(-1, 0): 1})
    with pytest.raises(DomainError):
        MultiPoly(2, {(1,): 1})
    assert MultiPoly(2, {(1, 0): 0}).is_zero


@given(multipolys(), multipolys(), multipolys())
def test_ring_laws(a, b, c):
    zero, one = MultiPoly.zero(2), MultiPoly.one(2)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a - a == zero


@given(multipolys(), multipolys(), st.integers(min_value=0, max_value=8))
def test_mul_truncated_agrees_with_full_product(a, b, bound):
    full = a * b
    expected = MultiPoly(2, {e: c for e, c in full.items() if sum(e) <= bound})
    assert a.mul_truncated(b, bound) == expected


@given(multipolys(), st.integers(min_value=0, max_value=3))
def test_pow_matches_repeated_product(a, n):
    expected = MultiPoly.one(2)
    for _ in range(n):
        expected = expected * a
    assert a ** n == expected


def test_degree_and_top_part():
    u = MultiPoly.variable(2, 0)
    v = MultiPoly.variable(2, 1)
    p = u ** 2 * v + u * v + 1
    assert p.total_degree() == 3
    assert p.top_part() == u ** 2 * v
    mixed = u ** 2 + u * v + v ** 2
    assert mixed.top_part() == mixed
    with pytest.raises(DomainError):
        MultiPoly.zero(2).total_degree()
    with pytest.raises(DomainError):
        MultiPoly.zero(2).top_part()


def test_arity_mismatch_is_rejected():
    with pytest.raises(DomainError):
        MultiPoly.one(2) + MultiPoly.one(3)
    with pytest.raises(DomainError):
        MultiPoly.one(2) * MultiPoly.one(3)


def test_int_coercion_both_sides():
    u = MultiPoly.variable(2, 0)
    assert 2 * u == u + u
    assert 1 + u == u + 1
    assert 1 - u == -(u - 1)


@given(multipolys())
def test_json_round_trip(p):
    assert MultiPoly.from_json(p.to_json()) == p


def test_rendering():
    u = MultiPoly.variable(2, 0)
    v = MultiPoly.variable(2, 1)
    assert str(u * v - u - v + 1) == "u*v - u - v + 1"
    assert str(v ** 2 - 2 * u) == "-2*u + v^2"
    assert str(MultiPoly.constant(2, 3)) == "3"
    assert str(MultiPoly.zero(2)) == "0"
    # three and more variables fall back to indexed names
    q = MultiPoly.variable(3, 2)
    assert "q3" in str(q)


def test_coefficient_lookup():
    u = MultiPoly.variable(2, 0)
    v = MultiPoly.variable(2, 1)
    p = 3 * u ** 2 * v - v
    assert p.coefficient((2, 1)) == 3
    assert p.coefficient((0, 1)) == -1
    assert p.coefficient((5, 5)) == 0
