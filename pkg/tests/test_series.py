"""Exact series arithmetic: frozen values plus algebraic property tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normord.series import (
    BiSeriesQ,
    PolyQ,
    SeriesQ,
    binomial,
    factorial,
    falling_factorial,
    laguerre_poly,
    phyperq_partial,
    phyperq_series,
    pochhammer,
    series_binpow,
    series_exp,
)

fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def test_factorial_binomial_falling():
    assert factorial(0) == 1
    assert factorial(6) == 720
    assert binomial(7, 3) == 35
    assert binomial(3, 7) == 0
    assert falling_factorial(7, 3) == 210
    assert falling_factorial(2, 3) == 0
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(Fraction(3), 0) == 1


def test_polyq_basics():
    p = PolyQ((1, 2, 3))
    q = PolyQ((0, 1))
    assert (p * q).coeffs == (0, 1, 2, 3)
    assert (p + q).coeffs == (1, 3, 3)
    assert p.eval(Fraction(2)) == 1 + 4 + 12
    assert PolyQ((0, 0)).coeffs == ()
    assert not PolyQ.zero()
    assert p.degree == 2
    assert p.coeff(9) == 0


def test_laguerre_poly_frozen():
    l2 = laguerre_poly(2)
    assert l2.coeffs == (1, -2, Fraction(1, 2))
    l3 = laguerre_poly(3)
    assert l3.eval(Fraction(0)) == 1
    assert l3.coeff(3) == Fraction(-1, 6)


def test_series_exp_frozen():
    s = SeriesQ(5, [0, 1, 1, 0, 0])  # t + t^2
    e = series_exp(s)
    assert e.coeffs[0] == 1
    assert e.coeffs[1] == 1
    assert e.coeffs[2] == Fraction(3, 2)
    assert e.coeffs[3] == Fraction(7, 6)


def test_series_exp_needs_zero_constant():
    with pytest.raises(ValueError):
        series_exp(SeriesQ(3, [1, 0, 0]))


def test_series_binpow_frozen():
    # (1 - 2t)^(-1/2)
    s = series_binpow(-2, Fraction(-1, 2), 4)
    assert s.coeffs[0] == 1
    assert s.coeffs[1] == 1
    assert s.coeffs[2] == Fraction(3, 2)


def test_phyperq_partial_frozen():
    # upper (2)_k / lower (1)_k = k+1, squared, over k!: 1, 4, 9/2, ...
    val = phyperq_partial([2, 2], [1, 1], Fraction(1), 3)
    assert val == 1 + 4 + Fraction(9, 2)


def test_phyperq_partial_pole_guard():
    # a nonpositive-integer lower parameter is a pole once reached
    with pytest.raises(ZeroDivisionError):
        phyperq_partial([1], [-2], Fraction(1), 5)
    # but a terminating upper parameter stops the sum before the pole
    assert phyperq_partial([-1], [-2], Fraction(1), 5) == Fraction(3, 2)


def test_phyperq_series_matches_partial():
    s = phyperq_series([Fraction(3, 2)], [Fraction(1)], 6)
    for terms in range(1, 6):
        # partial sums at x=1 equal the series coefficients accumulated
        assert phyperq_partial([Fraction(3, 2)], [Fraction(1)], 1, terms) == sum(
            s.coeffs[:terms]
        )


@settings(max_examples=60)
@given(st.lists(fractions, min_size=0, max_size=5),
       st.lists(fractions, min_size=0, max_size=5))
def test_series_exp_additivity(a_tail, b_tail):
    order = 7
    a = SeriesQ(order, [Fraction(0)] + a_tail + [Fraction(0)] * (order - 1 - len(a_tail)))
    b = SeriesQ(order, [Fraction(0)] + b_tail + [Fraction(0)] * (order - 1 - len(b_tail)))
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


@settings(max_examples=60)
@given(fractions, fractions, st.integers(min_value=-3, max_value=3))
def test_series_binpow_additivity(alpha, beta, c):
    order = 6
    lhs = series_binpow(c, alpha, order) * series_binpow(c, beta, order)
    rhs = series_binpow(c, alpha + beta, order)
    assert lhs == rhs


@settings(max_examples=40)
@given(st.lists(st.fractions(min_value=Fraction(1, 4), max_value=4,
                             max_denominator=4), min_size=1, max_size=3),
       st.integers(min_value=1, max_value=8))
def test_phyperq_upper_equals_lower_collapses(params, terms):
    # identical upper and lower parameter lists leave the exponential series
    val = phyperq_partial(params, params, Fraction(1), terms)
    assert val == sum(Fraction(1, factorial(k)) for k in range(terms))


def test_results_reproducible():
    a = series_binpow(-3, Fraction(-1, 3), 9)
    b = series_binpow(-3, Fraction(-1, 3), 9)
    assert a == b and a.coeffs == b.coeffs
    x = phyperq_partial([Fraction(5, 2)], [1, 1], Fraction(2, 3), 20)
    y = phyperq_partial([Fraction(5, 2)], [1, 1], Fraction(2, 3), 20)
    assert x == y


def test_biseries_basics():
    one = BiSeriesQ.one(3, 3)
    s = BiSeriesQ.from_x_series(SeriesQ(3, [0, 1, 0]), 3)
    t = BiSeriesQ.from_y_series(SeriesQ(3, [0, 1, 0]), 3)
    prod = (one + s) * (one + t)
    assert prod.coeff(0, 0) == 1
    assert prod.coeff(1, 1) == 1
    assert prod.coeff(1, 0) == 1
    e = (s + t).exp()
    assert e.coeff(1, 1) == 1  # x*y term of e^(x+y)
    assert e.coeff(2, 0) == Fraction(1, 2)


def test_series_coeff_out_of_range():
    s = SeriesQ(3, [1, 2, 3])
    with pytest.raises(IndexError):
        s.coeff(3)
