from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchnet.polynomials import (
    NForm,
    Poly,
    base_parallel,
    base_series,
    compose_rel,
    nform_dominates,
    nform_to_standard,
    standard_to_nform,
)
from matchnet.words import Word, all_words


def test_base_polynomials():
    assert base_series().coeffs == (0, 0, 1)
    assert base_parallel().coeffs == (0, 2, -1)
    assert base_parallel()(Fraction(1, 2)) == Fraction(3, 4)


def test_poly_validation_and_round_trip():
    with pytest.raises(ValueError):
        Poly((0, 1, 1), 1)
    f = Poly((0, 2, -1), 2)
    assert Poly.from_dict(f.to_dict()) == f
    assert Poly((0, 1, 0, 0), 4).degree == 1  # trailing zeros trimmed


def test_compose_rel_small_words():
    assert compose_rel(Word(())).coeffs == (0, 1)
    assert compose_rel(Word((0,))).coeffs == (0, 0, 1)
    assert compose_rel(Word((1,))).coeffs == (0, 2, -1)
    # SoP(2,2): (2p - p^2)^2
    assert compose_rel(Word((0, 1))).coeffs == (0, 0, 4, -4, 1)
    # PoS(2,2): 1 - (1 - p^2)^2
    assert compose_rel(Word((1, 0))).coeffs == (0, 0, 2, 0, -1)


def test_compose_rel_outermost_bit_first():
    # u_1 acts last: C^(01) applies parallel inside, series outside
    p = Fraction(1, 3)
    par = 2 * p - p * p
    assert compose_rel(Word((0, 1)))(p) == par * par


def test_rel_fixed_points():
    for u in all_words(4):
        f = compose_rel(u)
        assert f(0) == 0 and f(1) == 1
        assert 0 < f(Fraction(1, 2)) < 1


def test_duality_on_compositions():
    # Rel(C^u; p) + Rel(C^(u complement); 1-p) = 1
    for u in all_words(4):
        f = compose_rel(u)
        g = compose_rel(u.complement())
        for p in (Fraction(1, 3), Fraction(2, 7), Fraction(9, 10)):
            assert f(p) + g(1 - p) == 1


def test_nform_round_trip_and_bounds():
    for u in all_words(4):
        f = compose_rel(u)
        nf = standard_to_nform(f)
        assert nform_to_standard(nf) == f
        assert all(0 <= nf.counts[i] <= comb(nf.n, i) for i in range(nf.n + 1))
        assert nf.counts[0] == 0 and nf.counts[-1] == 1


def test_nform_validation():
    with pytest.raises(ValueError):
        NForm(3, (0, 1, 1))
    nf = NForm(2, (0, 1, 1))
    assert NForm.from_dict(nf.to_dict()) == nf
    with pytest.raises(ValueError):
        standard_to_nform(Poly((0, 0, 1), 2), n=1)


def test_nform_dominance():
    lo = standard_to_nform(compose_rel(Word((0, 0))))
    hi = standard_to_nform(compose_rel(Word((1, 1))))
    assert nform_dominates(lo, hi)
    assert not nform_dominates(hi, lo)
    with pytest.raises(ValueError):
        nform_dominates(lo, standard_to_nform(compose_rel(Word((1,)))))


@given(st.integers(0, 1023), st.integers(1, 6))
def test_nform_conversion_inverts(code, n):
    coeffs = tuple((code >> i) % 4 - 1 for i in range(n + 1))
    f = Poly(coeffs, n)
    assert nform_to_standard(standard_to_nform(f, n)) == f
