from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repwalk.series import (
    TruncSeries,
    euler_lhs,
    euler_lhs_rhs,
    euler_partial_product,
    gaussian_binomial,
    geometric_factor,
    q_pochhammer,
)

rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=12
)


@st.composite
def series(draw, order=6):
    coeffs = draw(st.lists(rationals, min_size=order + 1, max_size=order + 1))
    return TruncSeries(order, tuple(coeffs))


def test_basic_arithmetic():
    one_plus_u = TruncSeries.from_coeffs(4, [1, 1])
    sq = one_plus_u * one_plus_u
    assert sq.coeffs == (1, 2, 1, 0, 0)
    one_minus_u = TruncSeries.from_coeffs(4, [1, -1])
    assert (one_minus_u * one_minus_u.reciprocal()).coeffs == (1, 0, 0, 0, 0)
    assert one_minus_u.reciprocal().coeffs == (1, 1, 1, 1, 1)


def test_reciprocal_requires_unit():
    with pytest.raises(ZeroDivisionError):
        TruncSeries.from_coeffs(3, [0, 1]).reciprocal()


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        TruncSeries.one(3) + TruncSeries.one(4)


@settings(deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (a * (b + c)).coeffs == (a * b + a * c).coeffs
    assert (a + b).coeffs == (b + a).coeffs
    assert (a * b).coeffs == (b * a).coeffs


@settings(deadline=None)
@given(series())
def test_reciprocal_property(a):
    if not a.coeffs[0]:
        return
    assert (a * a.reciprocal()).coeffs == TruncSeries.one(a.order).coeffs


def test_powers():
    g = geometric_factor(5, Fraction(1, 2))
    assert (g**0).coeffs == TruncSeries.one(5).coeffs
    assert (g**3).coeffs == (g * g * g).coeffs
    assert (g**-1).coeffs == g.reciprocal().coeffs


def test_q_pochhammer_values():
    assert q_pochhammer(2, 0) == 1
    assert q_pochhammer(2, 2) == Fraction(3, 8)
    assert q_pochhammer(2, 3) == Fraction(21, 64)
    assert q_pochhammer(Fraction(3, 2), 1) == Fraction(1, 3)
    with pytest.raises(ValueError):
        q_pochhammer(1, 2)


def test_euler_lhs_coefficients():
    lhs = euler_lhs(2, 4)
    assert lhs.coeffs[0] == 1
    assert lhs.coeffs[1] == 2
    assert lhs.coeffs[2] == Fraction(1) / Fraction(3, 8)


def test_partial_product_equals_gaussian_binomial():
    for q in (2, 3):
        for n_factors in (3, 6, 11):
            p = euler_partial_product(q, 5, n_factors)
            for n, c in enumerate(p.coeffs):
                assert c == gaussian_binomial(n_factors + n - 1, n, Fraction(1, q))


def test_euler_identity_stabilized():
    for q in (2, 3):
        lhs, rhs = euler_lhs_rhs(q, 6)
        assert lhs.coeffs[0] == rhs.coeffs[0] == 1
        for a, b in zip(lhs.coeffs, rhs.coeffs):
            assert abs(a - b) < Fraction(1, 10**30)


def test_partial_products_increase_to_limit():
    # each new factor only adds nonnegative mass at every order
    q = 2
    prev = euler_partial_product(q, 5, 6)
    limit = euler_lhs(q, 5)
    for k in range(7, 30):
        cur = euler_partial_product(q, 5, k)
        for a, b, c in zip(prev.coeffs, cur.coeffs, limit.coeffs):
            assert a <= b <= c
        prev = cur
