"""Lambert W and the asymptotic formulas for Bell and Takeuchi growth.

The natural asymptotic scale is w = W(n) (W e^W = n, principal branch);
every formula below is evaluated in terms of (w, e^w = n/w) directly.

Implemented expansions, with log B_n / log T_n taken from exact integers:

  log B_n = e^w (w^2-w+1) - log(1+w)/2 - 1
            - w(2w^2+7w+10)/(24(1+w)^3) e^{-w}
            - w(2w^4+12w^3+29w^2+40w+36)/(48(1+w)^6) e^{-2w} + O(e^{-3w})

  log T_n = e^w (w^2-w+1) + w^2/2 - log(1+w)/2 + log(ct) - 1
            - w(26w^2+67w+46)/(24(1+w)^3) e^{-w} + O(e^{-2w})

  log That_n = e^w (w^2-w+1) + w^2/2 - log(1+w)/2 + h0 - 1
               + w(12w^5+24w^4+36w^3+58w^2+29w-10)/(24(w+1)^3) e^{-w}
               + [(w+1)(h1^2+h2) + (2w^2+w+2) h1]/2 e^{-w} + O(e^{-2w})

plus the elementary bracketing bounds
exp(n log n - n log log n - n) < T_n < exp(n log n - n + log n).

``CT_REFERENCE`` is the limiting ratio ct = lim T_{n+1}/(B_n e^{w^2/2+w}),
quoted to 25 digits; ``extrapolation.estimate_ct`` reproduces it from the
exact tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, workprec

from .bigfloat import DEFAULT_PRECISION, check_precision, log_exact, to_mpf
from .errors import TailBoundError
from .sequences import SequenceTable

#: 25-digit reference value of ct; the last digit is uncertain by 1.
CT_REFERENCE = "2.2394331040052607317547850"


def ct_reference(bits: int = DEFAULT_PRECISION):
    return to_mpf(CT_REFERENCE, bits)


def lambert_w(x, precision_bits: int = DEFAULT_PRECISION):
    """Principal-branch W(x) for x >= 0 by Halley iteration.

    Seeded with log x - log log x for large x, Newton-safe seed below e;
    iterates until the step falls under 2^-p |w|.
    """
    check_precision(precision_bits)
    with workprec(precision_bits + 16):
        x = to_mpf(x, precision_bits + 16) if not hasattr(x, "_mpf_") else mpf(x)
        if x < 0:
            raise ValueError("lambert_w: negative argument (principal branch)")
        if x == 0:
            return mpf(0)
        if x > mpf("2.8"):
            w = mp.log(x) - mp.log(mp.log(x))
        else:
            w = x / (1 + x)
        tol = mpf(2) ** (-precision_bits - 2)
        for _ in range(precision_bits + 64):
            e = mp.exp(w)
            f = w * e - x
            w_next = w - f / (e * (w + 1) - (w + 2) * f / (2 * w + 2))
            if abs(w_next - w) <= abs(w_next) * tol:
                w = w_next
                break
            w = w_next
        return +w


@dataclass(frozen=True)
class WValue:
    """n together with w = W(n) and e^w = n/w at a fixed precision."""

    n: int
    w: object
    exp_w: object
    precision_bits: int

    def defect(self):
        """|w e^w - n| / n; bounded by ~2^-precision_bits."""
        with workprec(self.precision_bits + 16):
            return abs(self.w * self.exp_w - self.n) / self.n


_W_CACHE: dict = {}


def w_value(n: int, precision_bits: int = DEFAULT_PRECISION) -> WValue:
    key = (n, precision_bits)
    got = _W_CACHE.get(key)
    if got is None:
        w = lambert_w(n, precision_bits)
        with workprec(precision_bits + 16):
            ew = mpf(n) / w if n else mp.exp(w)
        got = _W_CACHE[key] = WValue(n, w, ew, precision_bits)
    return got


def bell_log_asymptotic(n: int, order: int = 2,
                        precision_bits: int = DEFAULT_PRECISION):
    """Partial sum of the log B_n expansion through the e^{-order*w} term."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1, or 2")
    wv = w_value(n, precision_bits)
    with workprec(precision_bits + 16):
        w, ew = wv.w, wv.exp_w
        v = ew * (w * w - w + 1) - mp.log(1 + w) / 2 - 1
        if order >= 1:
            v -= w * (2 * w * w + 7 * w + 10) / (24 * (1 + w) ** 3) / ew
        if order >= 2:
            v -= w * (2 * w ** 4 + 12 * w ** 3 + 29 * w * w + 40 * w + 36) / \
                (48 * (1 + w) ** 6) / (ew * ew)
        return +v


def conjecture1_log_t(n: int, ct, precision_bits: int = DEFAULT_PRECISION):
    """The conjectured log T_n value at a given constant ct."""
    if n < 1:
        raise ValueError("n >= 1 required")
    wv = w_value(n, precision_bits)
    with workprec(precision_bits + 16):
        w, ew = wv.w, wv.exp_w
        return +(ew * (w * w - w + 1) + w * w / 2 - mp.log(1 + w) / 2
                 + mp.log(to_mpf(ct, precision_bits + 16)) - 1
                 - w * (26 * w * w + 67 * w + 46) / (24 * (1 + w) ** 3) / ew)


@dataclass(frozen=True)
class HExpansion:
    """Free parameters of log h(x) = h0 + h1 (x-1) + h2 (x-1)^2/2 + ..."""

    h0: object
    h1: object = 0
    h2: object = 0


def hat_t_log(n: int, h: HExpansion,
              precision_bits: int = DEFAULT_PRECISION):
    """The dominated-sum approximation to log T_n at a given h-expansion."""
    if n < 1:
        raise ValueError("n >= 1 required")
    wv = w_value(n, precision_bits)
    with workprec(precision_bits + 16):
        w, ew = wv.w, wv.exp_w
        h0 = to_mpf(h.h0, precision_bits + 16)
        h1 = to_mpf(h.h1, precision_bits + 16)
        h2 = to_mpf(h.h2, precision_bits + 16)
        v = ew * (w * w - w + 1) + w * w / 2 - mp.log(1 + w) / 2 + h0 - 1
        v += w * (12 * w ** 5 + 24 * w ** 4 + 36 * w ** 3
                  + 58 * w * w + 29 * w - 10) / (24 * (w + 1) ** 3) / ew
        v += ((w + 1) * (h1 * h1 + h2) + (2 * w * w + w + 2) * h1) / 2 / ew
        return +v


def growth_gap(t_table: SequenceTable, b_table: SequenceTable, n: int,
               precision_bits: int = DEFAULT_PRECISION):
    """T_{n+1}/T_n - B_n/B_{n-1}, exact ratios evaluated in BigFloat."""
    if n < 1:
        raise ValueError("n >= 1 required")
    g = Fraction(t_table[n + 1], t_table[n]) - Fraction(b_table[n], b_table[n - 1])
    return to_mpf(g, precision_bits)


def growth_gap_exceeds_one(t_table: SequenceTable, b_table: SequenceTable,
                           n: int) -> bool:
    """Exact integer test of T_{n+1}/T_n - B_n/B_{n-1} >= 1."""
    return (t_table[n + 1] * b_table[n - 1]
            - b_table[n] * t_table[n]
            - t_table[n] * b_table[n - 1]) >= 0


def figure2_ratio(t_table: SequenceTable, b_table: SequenceTable, n: int,
                  precision_bits: int = DEFAULT_PRECISION):
    """u_n = T_{n+1} / (B_n exp(w^2/2 + w)) with w = W(n); tends to ct."""
    if n < 1:
        raise ValueError("n >= 1 required")
    wv = w_value(n, precision_bits)
    with workprec(precision_bits + 16):
        w = wv.w
        return +(mpf(t_table[n + 1]) / (mpf(b_table[n]) * mp.exp(w * w / 2 + w)))


def knuth_bounds_check(t_table: SequenceTable, n: int,
                       precision_bits: int = DEFAULT_PRECISION):
    """Strict bracketing of T_n; returns (lower_ok, upper_ok, margins).

    Margins are the log-gaps (log T_n - lower exponent, upper - log T_n).
    """
    if n < 2:
        raise ValueError("n >= 2 required (log log n)")
    with workprec(precision_bits + 16):
        logn = mp.log(n)
        lower = n * logn - n * mp.log(logn) - n
        upper = n * logn - n + logn
        logt = log_exact(t_table[n], precision_bits)
        return (logt > lower, logt < upper, (+(logt - lower), +(upper - logt)))


def bell_sum_peak(n: int) -> int:
    """argmax_m of m^n/m!: the last m with (m+1)^(n-1) >= m^n, plus one.

    Documented to land near e^{W(n)}.
    """
    lo, hi = 1, max(4, 3 * n)
    # ratio test: term grows while (1+1/m)^n > m+1  <=>  (m+1)^n > m^n (m+1)
    def grows(m: int) -> bool:
        return (m + 1) ** n > m ** n * (m + 1)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if grows(mid):
            lo = mid
        else:
            hi = mid
    return lo + 1


def bell_sum_approx(n: int, m_terms: int,
                    precision_bits: int = DEFAULT_PRECISION):
    """(1/e) sum_{m=0}^{M} m^n/m! with a checked geometric tail bound.

    Requires M >= e * e^{W(n)} so the tail ratio is safely below 1; raises
    TailBoundError if the bound cannot be pushed below the target precision.
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    wv = w_value(max(n, 1), precision_bits)
    with workprec(precision_bits + 32):
        if m_terms < mp.e * wv.exp_w:
            raise TailBoundError(
                f"m_terms={m_terms} below e*e^W(n)~{float(mp.e * wv.exp_w):.1f}")
        s = mpf(0)
        log_fact = mpf(0)
        for m in range(m_terms + 1):
            if m:
                log_fact += mp.log(m)
                s += mp.exp(n * mp.log(m) - log_fact)
            elif n == 0:
                s += 1
        # tail: a_{M+1} * 1/(1-rho), rho = e^{n/(M+1)}/(M+2) decreasing in m
        log_next = n * mp.log(m_terms + 1) - (log_fact + mp.log(m_terms + 1))
        rho = mp.exp(mpf(n) / (m_terms + 1)) / (m_terms + 2)
        if rho >= mpf(1) / 2:
            raise TailBoundError(f"tail ratio {float(rho):.3f} not < 1/2")
        tail = mp.exp(log_next) / (1 - rho)
        result = s / mp.e
        if tail > abs(result) * mpf(2) ** (-precision_bits):
            raise TailBoundError(
                f"tail bound {mp.nstr(tail, 5)} above target precision; "
                f"increase m_terms")
        return +result
