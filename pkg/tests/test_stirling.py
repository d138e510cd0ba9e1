"""Generalized Stirling/Bell numbers: frozen sequences, classical anchors,
first-kind identities, and the Dobinski sums."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normord.series import PolyQ, binomial, factorial
from normord.stirling import (
    StirlingTriangle,
    b_pp,
    bell_sequence,
    classical_bell,
    classical_stirling2,
    dobinski_adaptive,
    dobinski_partial,
    gen_bell_number,
    gen_bell_poly,
    gen_stirling,
    product_poly,
    stirling1_signless,
)
from normord.weyl import diagonal_reduce, word_to_normal_form

# self-consistent values (every internal oracle and the catalogued
# A002720 entry give 13327 at n = 6)
SEQUENCES = {
    (1, 1): [1, 2, 7, 34, 209, 1546, 13327],
    (1, 2): [1, 5, 87, 2971, 163121, 12962661],
    (1, 3): [1, 15, 1657, 513559, 326922081, 363303011071],
    (2, 2): [1, 10, 339, 23395, 2682076, 457112571, 107943795145],
    (2, 3): [1, 37, 9415, 7063615, 11360980081, 33040809105661,
             156151310977544887],
    (3, 3): [1, 77, 39839, 62310039, 214107236041, 1358185668416501,
             14247249149298651007],
    (3, 4): [1, 372, 1905633, 43249617004, 2805942285116705,
             411223445534704016116, 117428972441699060660584977],
}


def test_frozen_bell_sequences():
    for (r, M), ref in SEQUENCES.items():
        assert bell_sequence(r, M, len(ref) - 1) == ref


def test_classical_anchors():
    assert classical_stirling2(4, 2) == 7
    assert classical_stirling2(5, 3) == 25
    assert [classical_bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    # r = 0 regresses to the classical second-kind numbers
    for n in range(7):
        for k in range(n + 1):
            assert gen_stirling(0, 1, n, k) == classical_stirling2(n, k)


def test_r1_m1_closed_form():
    for n in range(9):
        for k in range(n + 2):
            assert gen_stirling(1, 1, n, k) == (
                factorial(n) // factorial(k) * binomial(n, k) if k <= n else 0
            )


def test_row_edges():
    for r in (1, 2, 3):
        for M in (1, 2, 3):
            for n in (1, 2, 3, 4):
                assert gen_stirling(r, M, n, 0) == (factorial(n) * r**n) ** M
                assert gen_stirling(r, M, n, M * n) == 1
                assert gen_stirling(r, M, n, M * n + 1) == 0
                assert gen_stirling(r, M, n, M * n + 7) == 0


def test_triangle_object_matches_function():
    tri = StirlingTriangle(2, 2)
    tri.extend_to(5)
    for n in range(6):
        assert tri.rows[n] == [gen_stirling(2, 2, n, k) for k in range(2 * n + 1)]


def test_gen_bell_poly_structure():
    p = gen_bell_poly(2, 1, 2)
    # row n=2 of S_2^(1): k = 0..2
    assert p.coeffs == tuple(
        Fraction(gen_stirling(2, 1, 2, k)) for k in range(3)
    )
    assert gen_bell_number(2, 1, 2) == p.eval(Fraction(1))


def test_first_kind_signless():
    assert [stirling1_signless(4, k) for k in range(1, 5)] == [6, 11, 6, 1]
    assert product_poly(3) == PolyQ((6, 11, 6, 1))
    # product_poly coefficients are the signless first-kind numbers
    for r in range(1, 9):
        assert product_poly(r) == PolyQ(
            stirling1_signless(r + 1, k) for k in range(1, r + 2)
        )


def test_rising_product_three_ways():
    # oracle a^r ad^r reduced to a diagonal polynomial, the product
    # (n+1)...(n+r), and the signless first-kind sum, for r <= 8
    for r in range(1, 9):
        word = (0,) * r + (1,) * r
        reduced = diagonal_reduce(word_to_normal_form(word))
        assert reduced == product_poly(r)
        direct = PolyQ((1,))
        for p in range(1, r + 1):
            direct = direct * PolyQ((p, 1))
        assert reduced == direct


def test_bell_diagonal_powers():
    for M in range(1, 4):
        for n in range(1, 5):
            assert gen_bell_number(1, M, n) == b_pp(n, M + 1)


def test_b_pp_frozen():
    assert b_pp(1, 2) == 2
    assert b_pp(2, 2) == 7
    assert b_pp(3, 2) == 34
    with pytest.raises(ValueError):
        b_pp(0, 2)


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=2),
       st.integers(min_value=0, max_value=4),
       st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4))
def test_dobinski_partial_monotone(r, M, n, x):
    prev = None
    for L in range(1, 12):
        val = dobinski_partial(r, M, n, x, L)
        if prev is not None:
            assert val >= prev
        prev = val


def test_dobinski_adaptive_hits_bell_values():
    from normord.hyperreal import HighPrecReal

    tol = Fraction(1, 10**30)
    for (r, M), ref in SEQUENCES.items():
        for n, bell in enumerate(ref):
            val, terms, _ = dobinski_adaptive(r, M, n, 1, tol)
            assert terms >= 1
            assert val.agrees_with(HighPrecReal(bell, 50), tol), (r, M, n)


def test_dobinski_adaptive_polynomial_argument():
    tol = Fraction(1, 10**30)
    for x in (Fraction(1, 2), Fraction(2)):
        val, _, _ = dobinski_adaptive(2, 2, 3, x, tol)
        ref = gen_bell_poly(2, 2, 3).eval(x)
        assert val.agrees_with(type(val)(ref, 50), tol)


def test_dobinski_rejects_bad_input():
    with pytest.raises(ValueError):
        dobinski_adaptive(1, 1, 2, -1, Fraction(1, 10**30))
    with pytest.raises(ValueError):
        dobinski_adaptive(1, 1, 2, 1, 0)


def test_oeis_anchor_a002720():
    # catalogued matching numbers: the (r,M) = (1,1) values are
    # n! * LaguerreL[n, -1] rounded exactly; first eight entries
    ref = [1, 2, 7, 34, 209, 1546, 13327, 130922]
    assert bell_sequence(1, 1, 7) == ref
