from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takasym.numerics import GaussianRational
from takasym.sequences import (RecurrenceSpec, SequenceTable, bell_numbers,
                               bell_spec, catalan_numbers,
                               catalan_partial_sums, family_numbers,
                               family_spec, run_general_recurrence,
                               takeuchi_numbers, takeuchi_spec)

GROUND_TRUTH_T = [0, 1, 4, 14, 53, 223, 1034, 5221, 28437, 165859]


def test_takeuchi_ground_truth():
    assert list(takeuchi_numbers(9).values) == GROUND_TRUTH_T
    assert list(takeuchi_numbers(0).values) == [0]
    assert list(takeuchi_numbers(1).values) == [0, 1]


def test_bell_values():
    assert list(bell_numbers(5).values) == [1, 1, 2, 5, 15, 52]
    assert list(bell_numbers(0).values) == [1]


def test_bell_lower_bound(takeuchi_301, bell_1001):
    for n in range(1, 201):
        assert bell_1001[n] <= takeuchi_301[n] if n <= 301 else True
    # strict from n = 2 onward over the full window
    for n in range(2, 301):
        assert bell_1001[n] < takeuchi_301[n]


def test_catalan_values():
    assert list(catalan_numbers(5).values) == [1, 1, 2, 5, 14, 42]
    b = catalan_partial_sums(3)
    assert b[1] == 1
    assert b[3] == 8


def test_takeuchi_strictly_increasing(takeuchi_301):
    for n in range(1, 301):
        assert takeuchi_301[n + 1] > takeuchi_301[n]


# ---------------------------------------------------------------------------
# the general recurrence driver vs the fast paths (independent code)
# ---------------------------------------------------------------------------

def test_general_recurrence_matches_takeuchi_300(takeuchi_301):
    table = run_general_recurrence(takeuchi_spec(), 300)
    assert table.values == takeuchi_301.values[:301]


def test_general_recurrence_bell():
    assert list(run_general_recurrence(bell_spec(), 5).values) == \
        [1, 1, 2, 5, 15, 52]


def test_general_recurrence_zero_spec():
    spec = RecurrenceSpec(lambda n, k: 0, lambda n: 0, 0, "integer", "zero")
    assert list(run_general_recurrence(spec, 10).values) == [0] * 11


def test_general_recurrence_family_spec_matches():
    lam = Fraction(1, 2)
    a = run_general_recurrence(family_spec(lam), 40)
    b = family_numbers(40, lam)
    assert tuple(Fraction(v) for v in a.values) == \
        tuple(Fraction(v) for v in b.values)


# ---------------------------------------------------------------------------
# the family
# ---------------------------------------------------------------------------

def test_family_lambda_zero_is_bell():
    assert [int(v) for v in family_numbers(20, 0).values] == \
        list(bell_numbers(20).values)


def test_family_lambda_one_hand_values():
    assert [int(v) for v in family_numbers(3, 1).values] == [1, 1, 3, 12]


def test_family_gaussian_hand_value():
    a = family_numbers(2, GaussianRational(0, 1))
    assert a[2] == GaussianRational(2, 1)


def test_family_lambda_one_integral_to_300():
    vals = family_numbers(300, 1).values
    assert all(isinstance(v, int) and v > 0 for v in vals)


def test_family_rational_matches_gaussian_with_zero_im():
    lam = Fraction(1, 3)
    a = family_numbers(25, lam)
    b = family_numbers(25, GaussianRational(lam, 0))
    for x, y in zip(a.values, b.values):
        assert y.im == 0 and Fraction(x) == y.re


@settings(max_examples=10, deadline=None)
@given(st.integers(-3, 5))
def test_family_small_integer_lambda_integral(lam):
    vals = family_numbers(12, lam).values
    for v in vals:
        assert Fraction(v).denominator == 1


# ---------------------------------------------------------------------------
# disk format
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("table", [
    takeuchi_numbers(9),
    family_numbers(6, Fraction(1, 2)),
    family_numbers(5, GaussianRational(1, Fraction(2, 3))),
])
def test_table_save_load_roundtrip(table, tmp_path):
    path = str(tmp_path / "t.seq")
    table.save(path)
    back = SequenceTable.load(path)
    assert back.name == table.name
    assert back.domain == table.domain
    assert tuple(back.values) == tuple(table.values)


def test_table_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.seq"
    path.write_text("nonsense\n1\n2\n")
    with pytest.raises(ValueError):
        SequenceTable.load(str(path))


def test_table_load_rejects_truncated(tmp_path):
    path = tmp_path / "short.seq"
    path.write_text("# takeuchi 3 integer\n0\n1\n")
    with pytest.raises(ValueError):
        SequenceTable.load(str(path))
