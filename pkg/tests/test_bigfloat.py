from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, workprec

from takasym.bigfloat import (agree_bits, format_bigfloat, log_exact,
                              parse_bigfloat, to_mpf)

fr = st.fractions(min_value=Fraction(1, 1000), max_value=1000)


def test_precision_floor():
    with pytest.raises(ValueError):
        to_mpf(1, 32)


@settings(max_examples=30)
@given(fr, fr)
def test_precision_doubling(a, b):
    """Ops at p and p+64 agree to >= p-8 bits."""
    p = 192
    for bits in (p, p + 64):
        with workprec(bits):
            pass
    x1 = to_mpf(a, p) * to_mpf(b, p) / (to_mpf(a, p) + to_mpf(b, p))
    x2 = to_mpf(a, p + 64) * to_mpf(b, p + 64) / (to_mpf(a, p + 64) + to_mpf(b, p + 64))
    assert agree_bits(x1, x2, p + 64) >= p - 8


@settings(max_examples=30)
@given(st.integers(1, 10 ** 30))
def test_log_exact_consistency(n):
    a = log_exact(n, 192)
    b = log_exact(n * n, 192)
    assert agree_bits(2 * a, b, 192) >= 160 or n == 1


def test_log_exact_huge_integer():
    n = 7 ** 4000   # ~3380 digits
    v = log_exact(n, 256)
    with workprec(256):
        assert agree_bits(v, 4000 * mp.log(7), 256) >= 240


def test_log_exact_fraction_and_domain():
    assert agree_bits(log_exact(Fraction(1, 2), 128),
                      -log_exact(2, 128), 128) >= 120
    with pytest.raises(ValueError):
        log_exact(0, 128)
    with pytest.raises(ValueError):
        log_exact(Fraction(-1, 2), 128)


@settings(max_examples=30)
@given(fr)
def test_bigfloat_string_roundtrip(q):
    x = to_mpf(q, 256)
    s = format_bigfloat(x, 256)
    assert "@256" in s
    y = parse_bigfloat(s)
    assert agree_bits(x, y, 256) >= 248
