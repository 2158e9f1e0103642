from fractions import Fraction
from math import comb

import mpmath
import pytest

from cubecover.bounds import (
    bound_report,
    bounds_c,
    bounds_pc,
    c_codim_upper,
    c_value,
    lower_bound_f,
    pc_outer_bound,
    turan_relation,
    verify_binomial_identity,
)
from cubecover.cube import Params
from cubecover.polychromatic import palette_size, scheme


@pytest.mark.parametrize("p, f", [((3, 2, 1), 3), ((4, 2, 1), 8), ((5, 4, 1), 3)])
def test_lower_bound_f_examples(p, f):
    assert lower_bound_f(Params(*p)) == f


def test_lower_bound_f_on_facets():
    for n in range(2, 13):
        for l in range(n - 1):
            assert lower_bound_f(Params(n, n - 1, l)) == -(-2 * n // (n - l))


@pytest.mark.parametrize("d, l, expected", [(3, 1, (4, 6)), (5, 2, (8, 20)), (2, 1, (2, 3))])
def test_bounds_pc_examples(d, l, expected):
    assert bounds_pc(d, l) == expected


def test_bounds_pc_grid():
    mpmath.mp.dps = 50
    for d in range(1, 21):
        for l in range(d):
            lo, hi = bounds_pc(d, l)
            assert lo <= hi
            out_lo, out_hi = pc_outer_bound(d, l)
            assert out_lo < out_hi
            assert hi <= out_lo
            exact = mpmath.e ** (l + 1) * (mpmath.mpf(d + 1) / (l + 1)) ** (l + 1)
            assert mpmath.mpf(out_lo.numerator) / out_lo.denominator <= exact
            assert exact <= mpmath.mpf(out_hi.numerator) / out_hi.denominator


@pytest.mark.parametrize(
    "d, l, expected",
    [(3, 1, (Fraction(1, 12), Fraction(1, 4))), (2, 1, (Fraction(1, 4), Fraction(1, 2)))],
)
def test_bounds_c_examples(d, l, expected):
    assert bounds_c(d, l) == expected


def test_bounds_c_matches_palette():
    for d in range(1, 21):
        for l in range(d):
            lo, hi = bounds_c(d, l)
            assert isinstance(lo, Fraction) and isinstance(hi, Fraction)
            assert lo <= hi
            assert hi == Fraction(1, palette_size(scheme(d, l)))


def test_c_codim_upper_examples():
    assert c_codim_upper(10, 8, 6) == Fraction(4, 4 * comb(8, 6)) == Fraction(1, 28)
    assert c_codim_upper(10, 8, 7) == Fraction(4, 2 * comb(8, 7))
    with pytest.raises(ValueError):
        c_codim_upper(10, 9, 7)


@pytest.mark.parametrize("n, d, f1, ex", [(3, 2, 3, 9), (4, 3, 3, 29), (5, 2, 0, 80)])
def test_turan_relation(n, d, f1, ex):
    assert turan_relation(n, d, f1) == ex


def test_turan_relation_rejects_excess():
    with pytest.raises(ValueError):
        turan_relation(3, 2, 13)


@pytest.mark.parametrize("n, d, l", [(5, 3, 1), (4, 2, 2), (6, 4, 2)])
def test_binomial_identity_examples(n, d, l):
    assert verify_binomial_identity(n, d, l)


def test_binomial_identity_grid():
    assert all(
        verify_binomial_identity(n, d, l)
        for n in range(31)
        for d in range(n + 1)
        for l in range(d + 1)
    )


def test_c_value():
    assert c_value(Params(3, 2, 1), 3) == Fraction(1, 4)
    assert c_value(Params(4, 2, 1), 8) == Fraction(1, 4)


def test_bound_report_consistency():
    for n in range(3, 9):
        for d in range(1, n):
            for l in range(d):
                rep = bound_report(Params(n, d, l))
                assert rep.c_lower <= rep.c_upper
                assert rep.pc_lower <= rep.pc_upper
                assert (rep.c_codim_upper is None) == (n - d < 2)
                assert (rep.ex_upper is None) == (l != 1)
                data = rep.to_dict()
                assert data["f_lower"] == lower_bound_f(Params(n, d, l))
                assert Fraction(data["c_lower"]) == rep.c_lower


def test_bound_report_with_exact_value():
    data = bound_report(Params(4, 3, 1), f_exact=3).to_dict()
    assert data["ex_upper"] == 29
    assert data["c_exact"] == "3/32"
