from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takasym.numerics import (GaussianRational, LambdaPoly, Poly,
                              binomial_general, format_gaussian,
                              format_rational, lagrange_interpolate,
                              parse_gaussian, parse_rational,
                              poly_shift_argument, solve_linear_exact)

fractions = st.fractions(min_value=-1000, max_value=1000)
nonzero_fractions = fractions.filter(lambda q: q != 0)


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

@given(nonzero_fractions)
def test_rational_inverse_product(q):
    assert q * (1 / q) == 1


@pytest.mark.parametrize("text, value", [
    ("3/4", Fraction(3, 4)),
    ("-7", Fraction(-7)),
    ("0", Fraction(0)),
    ("22/7", Fraction(22, 7)),
])
def test_parse_format_rational(text, value):
    assert parse_rational(text) == value
    assert parse_rational(format_rational(value)) == value


@given(fractions, fractions)
def test_gaussian_roundtrip(a, b):
    z = GaussianRational(a, b)
    assert parse_gaussian(format_gaussian(z)) == z


def test_gaussian_field_ops():
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -1)
    assert z * w / w == z
    assert (z + w) - w == z
    assert z * z.conjugate() == GaussianRational(5)
    assert GaussianRational(0, 1) ** 2 == -1
    with pytest.raises(ZeroDivisionError):
        z / GaussianRational(0)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("coeffs, expected", [
    ([0, 0, 1], [1, -2, 1]),      # m^2 -> (m-1)^2
    ([1], [1]),                   # constants fixed
    ([0, 0, 0, 1], [-1, 3, -3, 1]),  # m^3 -> (m-1)^3
])
def test_poly_shift_examples(coeffs, expected):
    assert poly_shift_argument(Poly(coeffs)) == Poly(expected)


@settings(max_examples=40)
@given(st.lists(fractions, min_size=1, max_size=51))
def test_poly_shift_roundtrip_degree_50(coeffs):
    p = Poly(coeffs)
    assert poly_shift_argument(poly_shift_argument(p), +1) == p


@pytest.mark.parametrize("points, expected", [
    ([(0, 1), (1, 1)], Poly([1])),
    ([(0, 0), (1, 1), (2, 4)], Poly([0, 0, 1])),
    ([(1, 1), (2, 3), (3, 6)], Poly([0, Fraction(1, 2), Fraction(1, 2)])),
])
def test_lagrange_examples(points, expected):
    assert lagrange_interpolate(points) == expected


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-50, 50), fractions),
                min_size=1, max_size=8,
                unique_by=lambda t: t[0]))
def test_lagrange_reproduces_nodes(points):
    p = lagrange_interpolate(points)
    for x, y in points:
        assert p.eval_at(x) == y


def test_lagrange_duplicate_nodes():
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 1), (1, 2)])


# ---------------------------------------------------------------------------
# binomials
# ---------------------------------------------------------------------------

def test_binomial_examples():
    assert binomial_general(4, 2) == 6
    assert binomial_general(Fraction(1, 2), 2) == Fraction(-1, 8)
    lam = LambdaPoly.lam()
    assert binomial_general(lam, 1) == lam


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_integer_binomial(n, k):
    assert binomial_general(n, k) == comb(n, k)


@given(st.integers(-30, 60), st.integers(0, 12))
def test_binomial_fraction_agrees_with_int_path(n, k):
    assert binomial_general(Fraction(n), k) == binomial_general(n, k)


# ---------------------------------------------------------------------------
# LambdaPoly ring
# ---------------------------------------------------------------------------

def test_lambda_poly_ring():
    lam = LambdaPoly.lam()
    p = (lam + 1) * (lam - 1)
    assert p == LambdaPoly((-1, 0, 1))
    assert p.eval_at(Fraction(3)) == 8
    assert (p - p) == 0
    assert (lam * lam).div_lam() == lam
    with pytest.raises(ValueError):
        (lam + 1).div_lam()


def test_lambda_poly_cap():
    lam = LambdaPoly.lam(cap=3)
    p = (lam + 1) ** 2 * (lam + 1) ** 2   # degree 4, truncated at 3
    assert p.coeffs == (Fraction(1), Fraction(4), Fraction(6), Fraction(4))
    with pytest.raises(ValueError):
        lam + LambdaPoly.lam(cap=5)


# ---------------------------------------------------------------------------
# exact linear solve
# ---------------------------------------------------------------------------

def test_solve_linear_exact_overdetermined():
    rows = [[1, 1], [1, -1], [2, 0]]
    rhs = [Fraction(3), Fraction(1), Fraction(4)]
    assert solve_linear_exact(rows, rhs) == [Fraction(2), Fraction(1)]


def test_solve_linear_exact_inconsistent():
    with pytest.raises(ArithmeticError):
        solve_linear_exact([[1], [1]], [Fraction(1), Fraction(2)])
    with pytest.raises(ValueError):
        solve_linear_exact([[1, 0], [1, 0]], [Fraction(1), Fraction(1)])


def test_solve_linear_exact_ring_rhs():
    lam = LambdaPoly.lam()
    x = solve_linear_exact([[2, 0], [0, 3]], [lam * 2, lam * 3 + 3])
    assert x[0] == lam and x[1] == lam + 1
