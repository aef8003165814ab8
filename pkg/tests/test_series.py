from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takasym.numerics import GaussianRational
from takasym.series import (TruncatedPowerSeries, series_catalan,
                            series_compose, series_exp, series_log,
                            series_pow_exact, series_sqrt_one_minus_4z,
                            solve_y, verify_bell_egf,
                            verify_family_functional_equation,
                            verify_identity, verify_special_case_identity,
                            verify_takeuchi_functional_equation)

S = TruncatedPowerSeries
small_fractions = st.fractions(min_value=-8, max_value=8)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_truncation_order_is_min_of_operands():
    a = S([1, 2, 3, 4], 3)
    b = S([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b).order == 1


@settings(max_examples=30)
@given(st.lists(small_fractions, min_size=1, max_size=6),
       st.lists(small_fractions, min_size=1, max_size=6),
       st.lists(small_fractions, min_size=1, max_size=6))
def test_ring_axioms_through_common_order(a, b, c):
    k = 5
    A, B, C = S(a, k), S(b, k), S(c, k)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + B == B + A


def test_reciprocal_and_division():
    one = S.one(6)
    geom = S([1] * 7, 6)
    assert (one - S.x(6)).reciprocal() == geom
    assert geom * (one - S.x(6)) == one
    with pytest.raises(ValueError):
        S.x(4).reciprocal()


def test_compose_examples():
    # 1/(1-z) o z^2 = 1 + z^2 + z^4 + ...
    f = S([1] * 7, 6)
    g = S([0, 0, 1], 6)
    assert series_compose(f, g) == S([1, 0, 1, 0, 1, 0, 1], 6)
    # T-series o (z - z^2)
    t = S([0, 1, 4, 14, 53], 4)
    assert series_compose(t, S([0, 1, -1], 4)) == S([0, 1, 3, 6, 15], 4)
    # identity composition
    assert series_compose(t, S.x(4)) == t
    with pytest.raises(ValueError):
        series_compose(t, S.one(4))


def test_sqrt_one_minus_4z():
    assert series_sqrt_one_minus_4z(4) == S([1, -2, -2, -4, -10], 4)
    sq = series_sqrt_one_minus_4z(12)
    assert sq * sq == S([1, -4], 12)


def test_catalan_series_and_quadratic_identity():
    c = series_catalan(10)
    assert list(c.coeffs[:6]) == [1, 1, 2, 5, 14, 42]
    # z C(z)^2 = C(z) - 1
    z = S.x(10)
    assert z * c * c == c - S.one(10)


def test_exp_log_roundtrip():
    u = S([0, 1, Fraction(-1, 2), Fraction(1, 3), 2, 0, 1], 6)
    assert series_log(series_exp(u)) == u
    with pytest.raises(ValueError):
        series_exp(S.one(4))
    with pytest.raises(ValueError):
        series_log(S.x(4))


@settings(max_examples=25)
@given(small_fractions)
def test_pow_exact_matches_integer_powers(c):
    f = S([1, c, c * c], 8)
    assert series_pow_exact(f, 3) == f ** 3


# ---------------------------------------------------------------------------
# solve_y
# ---------------------------------------------------------------------------

def test_solve_y_bell_case():
    # lam = 0: y = z/(1-z)
    assert solve_y(0, 8) == S([0] + [1] * 8, 8)


def test_solve_y_catalan_case():
    # lam = 1: y = C(z) - 1
    y = solve_y(1, 8)
    cat = series_catalan(8)
    assert y == cat - S.one(8)


def test_solve_y_first_order_coefficient_is_one():
    for lam in (0, 1, Fraction(5, 3), GaussianRational(1, 2)):
        y = solve_y(lam, 3)
        assert y.coeffs[1] == 1


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=-3, max_value=3))
def test_solve_y_fixed_point_roundtrip(lam):
    k = 10
    y = solve_y(lam, k)
    rhs = S.x(k) * series_pow_exact(S.one(k) + y, lam + 1)
    assert y == rhs


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

def test_takeuchi_functional_equation_passes():
    rep = verify_takeuchi_functional_equation(30)
    assert rep.passed
    assert {c.name for c in rep.clauses} == {"direct", "transformed"}


def test_takeuchi_functional_equation_order_zero():
    assert verify_takeuchi_functional_equation(0).passed


@pytest.mark.parametrize("lam", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_identity_grid(lam, n):
    rep = verify_identity(lam, n, 20)
    assert rep.passed, rep.as_dict()


def test_identity_rational_and_gaussian_lambda():
    assert verify_identity(Fraction(1, 2), 2, 12).passed
    assert verify_identity(GaussianRational(0, 1), 1, 8).passed


def test_family_functional_equation_grid():
    for lam in (0, 1, 2, 3):
        assert verify_family_functional_equation(lam, 15).passed


def test_bell_egf():
    assert verify_bell_egf(10).passed


def test_special_case_identity():
    rep = verify_special_case_identity(0, 10)
    assert rep.passed
    assert "exponent n" in rep.clauses[0].note
    assert verify_special_case_identity(3, 12).passed


def test_report_json_shape():
    rep = verify_identity(1, 1, 8)
    d = rep.as_dict()
    assert d["passed"] is True
    assert all(c["first_failing_order"] is None for c in d["clauses"])


def test_mismatch_is_reported_with_order():
    a = S([0, 1, 2, 3], 3)
    b = S([0, 1, 5, 3], 3)
    assert a.first_mismatch(b) == 2
    assert a != b
