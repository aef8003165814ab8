"""High-precision floating point, backed by mpmath.

Every function takes an explicit ``precision_bits`` (>= 64) and evaluates
under ``mp.workprec`` so the global mpmath state is left untouched.
Values are plain ``mpmath.mpf``/``mpc``; mixing precisions later re-rounds
per mpmath semantics (round to nearest).
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf, workprec

DEFAULT_PRECISION = 256
MIN_PRECISION = 64


def check_precision(bits: int) -> int:
    if bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}, got {bits}")
    return bits


def to_mpf(value, bits: int = DEFAULT_PRECISION):
    """Round an int / Fraction / decimal string / mpf to ``bits`` precision."""
    check_precision(bits)
    with workprec(bits):
        if isinstance(value, Fraction):
            return mpf(value.numerator) / value.denominator
        if isinstance(value, str):
            return mpf(value)
        return mpf(value)


def log_exact(value, bits: int = DEFAULT_PRECISION):
    """log of a positive int or Fraction, full relative precision.

    Arguments with thousands of digits are fine: mpf conversion keeps a
    ``bits``-bit mantissa and an exact exponent, so the log is accurate to
    ~2^-bits absolute once the value exceeds 1.
    """
    check_precision(bits)
    with workprec(bits + 16):
        if isinstance(value, Fraction):
            if value <= 0:
                raise ValueError("log_exact needs a positive argument")
            r = mp.log(mpf(value.numerator)) - mp.log(mpf(value.denominator))
        else:
            if value <= 0:
                raise ValueError("log_exact needs a positive argument")
            r = mp.log(mpf(value))
        return +r


def format_bigfloat(x, bits: int) -> str:
    """Round-trip-safe decimal rendering with a precision annotation.

    Format: ``<decimal digits>@<bits>``; parsing reads the digits back at
    the annotated precision.
    """
    digits = int(bits * 0.30103) + 3
    with workprec(bits):
        return f"{mp.nstr(x, digits, strip_zeros=False)}@{bits}"


def parse_bigfloat(text: str):
    body, _, ann = text.partition("@")
    bits = int(ann) if ann else DEFAULT_PRECISION
    with workprec(bits):
        return mpf(body)


def agree_bits(a, b, bits: int) -> int:
    """Number of leading bits on which a and b agree (relative)."""
    with workprec(bits):
        if a == b:
            return bits
        scale = max(abs(a), abs(b))
        if scale == 0:
            return bits
        d = abs(a - b) / scale
        return max(0, int(-mp.log(d, 2)))


def agree_digits(a, b, bits: int) -> int:
    """Decimal digits of agreement between two values (relative)."""
    with workprec(bits):
        if a == b:
            return int(bits * 0.30103)
        scale = max(abs(a), abs(b))
        if scale == 0:
            return int(bits * 0.30103)
        d = abs(a - b) / scale
        if d == 0:
            return int(bits * 0.30103)
        return max(0, int(-mp.log10(d)))
