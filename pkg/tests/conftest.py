"""Shared fixtures: the expensive exact tables are built once per session."""

import pytest
from mpmath import mp

from takasym import bell_numbers, takeuchi_numbers


@pytest.fixture(scope="session", autouse=True)
def ambient_precision():
    # test-side comparisons do mpf arithmetic outside workprec blocks;
    # a high ambient precision keeps those comparisons meaningful
    old = mp.prec
    mp.prec = 512
    yield
    mp.prec = old


@pytest.fixture(scope="session")
def takeuchi_1001():
    return takeuchi_numbers(1001)


@pytest.fixture(scope="session")
def bell_1001():
    return bell_numbers(1001)


@pytest.fixture(scope="session")
def takeuchi_301(takeuchi_1001):
    from takasym.sequences import SequenceTable
    return SequenceTable("takeuchi", takeuchi_1001.values[:302], "integer")
