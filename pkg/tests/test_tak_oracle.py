import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takasym.errors import BudgetExceededError
from takasym.sequences import takeuchi_numbers
from takasym.tak_oracle import (oracle_table, tak_count, tak_plain,
                                tak_value, _evaluate)

GROUND_TRUTH_T = [0, 1, 4, 14, 53, 223, 1034, 5221, 28437, 165859]


def test_base_clause():
    assert tak_value(0, 0, 1) == 0
    assert tak_count(0, 0, 1) == 0


def test_small_else_values_match_plain_recursion():
    for args in [(1, 0, 2), (2, 0, 3), (3, 1, 0), (4, 2, 7)]:
        v, c = tak_plain(*args)
        assert tak_value(*args) == v
        assert tak_count(*args) == c


def test_counts_against_ground_truth():
    for n in range(5):
        assert tak_count(n, 0, n + 1) == GROUND_TRUTH_T[n]
    assert tak_count(5, 0, 6) == 223


def test_oracle_table_matches_ground_truth():
    res = oracle_table(9)
    assert res.complete
    assert list(res.table.values) == GROUND_TRUTH_T


def test_oracle_equals_recurrence_to_10():
    res = oracle_table(10)
    assert res.complete
    assert res.table.values == takeuchi_numbers(10).values


def test_memoized_equals_memoless_n_le_5():
    for n in range(6):
        v, c = tak_plain(n, 0, n + 1)
        memo = {}
        assert _evaluate(n, 0, n + 1, memo, 10 ** 7) == (v, c)
        # every memoized state agrees with plain recursion
        for (x, y, z), (mv, mc) in list(memo.items())[::7]:
            assert tak_plain(x, y, z) == (mv, mc)


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 5), st.integers(-4, 5), st.integers(-4, 5))
def test_count_nonnegative_and_zero_iff_base(x, y, z):
    c = tak_count(x, y, z)
    assert c >= 0
    assert (c == 0) == (x <= y)


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceededError):
        tak_count(9, 0, 10, budget=50)


def test_oracle_table_partial_on_budget():
    res = oracle_table(9, budget=50)
    assert not res.complete
    assert res.cutoff is not None
    assert list(res.table.values) == GROUND_TRUTH_T[:res.cutoff]
    # completed prefix is still exact
    assert res.cutoff >= 1
