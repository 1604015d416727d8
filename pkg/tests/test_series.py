"""Truncated power series over exact coefficient rings."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stackzeta import (
    DomainError,
    IntLaurent,
    MotivicClass,
    MultiPoly,
    TruncatedSeries,
    hd_ring,
    motivic_ring,
)

from _strategies import motivic_classes

MOT = motivic_ring()


def series_of(coeffs):
    return TruncatedSeries(MOT, tuple(coeffs))


@st.composite
def motivic_series(draw, order=3):
    return series_of([draw(motivic_classes(max_terms=2)) for _ in range(order + 1)])


@st.composite
def unit_series(draw, order=3):
    return series_of(
        [MotivicClass.one()] + [draw(motivic_classes(max_terms=2)) for _ in range(order)]
    )


def test_ring_descriptor():
    assert motivic_ring() == motivic_ring()
    assert hd_ring(2) == hd_ring(2)
    assert hd_ring(2) != hd_ring(3)
    assert MOT.is_member(MotivicClass.one())
    assert not MOT.is_member(1)
    assert not MOT.is_member(MultiPoly.one(2))
    assert hd_ring(2).is_member(MultiPoly.one(2))
    assert not hd_ring(2).is_member(MultiPoly.one(3))


def test_constructor_needs_a_constant_term():
    with pytest.raises(DomainError):
        TruncatedSeries(MOT, ())


def test_cross_ring_operations_are_rejected():
    a = TruncatedSeries.one(MOT, 2)
    b = TruncatedSeries.one(hd_ring(2), 2)
    with pytest.raises(DomainError):
        a + b
    with pytest.raises(DomainError):
        a * b
    with pytest.raises(DomainError):
        a.first_divergence(b)


@given(motivic_series(), motivic_series(), motivic_series())
def test_arithmetic_laws(a, b, c):
    one = TruncatedSeries.one(MOT, a.order)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * one == a
    assert a - a == TruncatedSeries.constant(MOT, MotivicClass.zero(), a.order)


@given(motivic_series())
def test_pow_matches_repeated_product(a):
    assert a ** 0 == TruncatedSeries.one(MOT, a.order)
    assert a ** 1 == a
    assert a ** 3 == a * a * a


@given(unit_series())
def test_inverse_round_trip(a):
    assert a * a.inverse() == TruncatedSeries.one(MOT, a.order)
    assert a ** -2 == (a.inverse()) ** 2


def test_inverse_needs_constant_term_one():
    s = series_of([MotivicClass.l_power(1), MotivicClass.one()])
    with pytest.raises(DomainError):
        s.inverse()


@given(unit_series())
def test_binary_operations_truncate_to_the_smaller_order(a):
    short = a.truncate(1)
    assert (a * short).order == 1
    assert (a + short).order == 1


@given(motivic_series())
def test_scale_t_composes(a):
    l = MotivicClass.l_power(1)
    assert a.scale_t(MotivicClass.one()) == a
    assert a.scale_t(l).scale_t(l) == a.scale_t(l * l)
    for k in range(a.order + 1):
        assert a.scale_t(l).coefficient(k) == l ** k * a.coefficient(k)


def test_scale_t_rejects_foreign_scalars():
    with pytest.raises(DomainError):
        TruncatedSeries.one(MOT, 2).scale_t(3)


@given(motivic_series(order=6))
def test_substitute_tk(a):
    assert a.substitute_tk(1) == a
    assert a.substitute_tk(3).substitute_tk(2) == a.substitute_tk(6)
    sub = a.substitute_tk(2)
    assert sub.order == a.order
    assert sub.coefficient(2) == a.coefficient(1)
    assert sub.coefficient(1) == MotivicClass.zero()
    with pytest.raises(DomainError):
        a.substitute_tk(0)


def test_truncate_bounds():
    s = TruncatedSeries.one(MOT, 3)
    assert s.truncate(3) == s
    assert s.truncate(0).order == 0
    with pytest.raises(DomainError):
        s.truncate(4)
    with pytest.raises(DomainError):
        s.truncate(-1)


def test_coefficient_bounds():
    s = TruncatedSeries.one(MOT, 2)
    with pytest.raises(IndexError):
        s.coefficient(3)
    with pytest.raises(IndexError):
        s.coefficient(-1)


def test_equality_requires_matching_order():
    assert TruncatedSeries.one(MOT, 2) != TruncatedSeries.one(MOT, 3)


@given(unit_series())
def test_first_divergence(a):
    assert a.first_divergence(a) is None
    coeffs = list(a.coefficients)
    coeffs[2] = coeffs[2] + MotivicClass.one()
    assert a.first_divergence(series_of(coeffs)) == 2


def test_build_constructor():
    s = TruncatedSeries.build(MOT, 3, lambda k: MotivicClass.l_power(k))
    assert s.coefficients == tuple(MotivicClass.l_power(k) for k in range(4))


def test_rendering_and_json():
    s = series_of(
        [MotivicClass.one(), MotivicClass.one(), MotivicClass.zero(), MotivicClass.l_power(1)]
    )
    assert str(s) == "1 + T + (L)*T^3"
    data = s.to_json()
    assert data["order"] == 3
    assert [MotivicClass.from_json(c) for c in data["coeffs"]] == list(s.coefficients)
    zero = TruncatedSeries.constant(MOT, MotivicClass.zero(), 2)
    assert str(zero) == "0"


def test_series_is_immutable():
    s = TruncatedSeries.one(MOT, 1)
    with pytest.raises(AttributeError):
        s.order = 5
