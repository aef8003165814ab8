"""Memoized evaluation of Takeuchi's function and its else-branch count.

    t(x,y,z) = y                                   if x <= y
             = t(t(x-1,y,z), t(y-1,z,x), t(z-1,x,y))   otherwise

T(x,y,z) counts how many times the else branch runs during a plain
(un-memoized) recursive evaluation:

    T = 0                      if x <= y
    T = 1 + T1 + T2 + T3 + T(outer triple)   otherwise

Memoization caches (value, count) per state purely as a computational
device; the cached counts add up to exactly the un-memoized totals, so the
counting semantics is unchanged.  T(n, 0, n+1) is the Takeuchi number T_n,
which the recurrence in ``sequences`` must reproduce -- this module is the
independent oracle for that.

Evaluation runs on an explicit work stack (deep recursions must not touch
the machine stack), budgeted by the number of distinct memo entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .sequences import DOMAIN_INTEGER, SequenceTable

DEFAULT_BUDGET = 10 ** 7

_ARG1, _ARG2, _ARG3, _OUTER = 0, 1, 2, 3


def _evaluate(x: int, y: int, z: int, memo, budget: int):
    """Return (value, count) for the state (x,y,z); memo maps state->pair."""
    if memo is None:
        memo = {}
    root = (x, y, z)
    if root in memo:
        return memo[root]
    # frame: [state, stage, v1, c1, v2, c2, v3, c3]
    stack = [[root, _ARG1, 0, 0, 0, 0, 0, 0]]
    ret = None  # (value, count) delivered by the last finished child
    while stack:
        frame = stack[-1]
        (x, y, z), stage = frame[0], frame[1]
        if stage == _ARG1:
            cached = memo.get(frame[0])
            if cached is not None:
                ret = cached
                stack.pop()
                continue
            if x <= y:
                if len(memo) >= budget:
                    raise BudgetExceededError(
                        f"memo budget {budget} exhausted", completed=len(memo))
                memo[frame[0]] = (y, 0)
                ret = (y, 0)
                stack.pop()
                continue
            child = (x - 1, y, z)
        elif stage == _ARG2:
            frame[2], frame[3] = ret
            child = (y - 1, z, x)
        elif stage == _ARG3:
            frame[4], frame[5] = ret
            child = (z - 1, x, y)
        elif stage == _OUTER:
            frame[6], frame[7] = ret
            child = (frame[2], frame[4], frame[6])
        else:
            value, c_outer = ret
            count = 1 + frame[3] + frame[5] + frame[7] + c_outer
            if len(memo) >= budget:
                raise BudgetExceededError(
                    f"memo budget {budget} exhausted", completed=len(memo))
            memo[frame[0]] = (value, count)
            ret = (value, count)
            stack.pop()
            continue
        frame[1] = stage + 1
        cached = memo.get(child)
        if cached is not None:
            ret = cached
        else:
            stack.append([child, _ARG1, 0, 0, 0, 0, 0, 0])
    return ret


def tak_value(x: int, y: int, z: int, memo=None,
              budget: int = DEFAULT_BUDGET) -> int:
    return _evaluate(x, y, z, memo, budget)[0]


def tak_count(x: int, y: int, z: int, memo=None,
              budget: int = DEFAULT_BUDGET) -> int:
    return _evaluate(x, y, z, memo, budget)[1]


def tak_plain(x: int, y: int, z: int):
    """Memo-free reference evaluation (small arguments only): (value, count)."""
    if x <= y:
        return y, 0
    v1, c1 = tak_plain(x - 1, y, z)
    v2, c2 = tak_plain(y - 1, z, x)
    v3, c3 = tak_plain(z - 1, x, y)
    v, c = tak_plain(v1, v2, v3)
    return v, 1 + c1 + c2 + c3 + c


@dataclass(frozen=True)
class OracleResult:
    table: SequenceTable
    cutoff: int | None = None   # first n that exceeded the budget, if any

    @property
    def complete(self) -> bool:
        return self.cutoff is None


def oracle_table(n_max: int, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """T(n, 0, n+1) for n = 0..n_max, one shared memo across n.

    On budget exhaustion the table is truncated at the last completed n and
    the cutoff is reported explicitly.
    """
    memo = {}
    values = []
    for n in range(n_max + 1):
        try:
            values.append(_evaluate(n, 0, n + 1, memo, budget)[1])
        except BudgetExceededError:
            return OracleResult(
                SequenceTable("takeuchi_oracle", tuple(values), DOMAIN_INTEGER),
                cutoff=n)
    return OracleResult(
        SequenceTable("takeuchi_oracle", tuple(values), DOMAIN_INTEGER))
