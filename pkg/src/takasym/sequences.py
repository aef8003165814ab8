"""Exact integer/rational sequences: Takeuchi, Bell, Catalan, and the
one-parameter binomial family.

Takeuchi numbers T_n (T(n,0,n+1) else-counts; Knuth's recurrence):

    T_{n+1} = sum_{k=0}^{n} [ C(n+k,n) - C(n+k,n+1) ] T_{n-k}
              + sum_{k=1}^{n+1} C(2k,k)/(k+1),          T_0 = 0.

Bell numbers B_n (OEIS A000110): B_{n+1} = sum_k C(n,k) B_{n-k}, B_0 = 1.
Catalan numbers C_n (OEIS A000108): C(2n,n)/(n+1).
Family A_n(lam): A_{n+1} = sum_{k=0}^n C(n + lam*k, k) A_{n-k}, A_0 = 1;
lam = 0 reproduces the Bell numbers.

Everything here is a true data dependency n -> n+1, so construction is
sequential; finished tables are immutable.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .numerics import (GaussianRational, binomial_general, format_gaussian,
                       format_rational, parse_gaussian, parse_rational)

DOMAIN_INTEGER = "integer"
DOMAIN_RATIONAL = "rational"
DOMAIN_GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class SequenceTable:
    """Values a_0..a_N of a named sequence, exact."""

    name: str
    values: tuple
    domain: str = DOMAIN_INTEGER

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    # -- disk format: "# <name> <N> <domain>" header, one value per line ----

    def save(self, path: str) -> None:
        fmt = _FORMATTERS[self.domain]
        d = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".seqtmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(f"# {self.name} {self.n_max} {self.domain}\n")
                for v in self.values:
                    fh.write(fmt(v) + "\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str) -> "SequenceTable":
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 4 or header[0] != "#":
                raise ValueError(f"bad sequence file header in {path}")
            name, n_max, domain = header[1], int(header[2]), header[3]
            parse = _PARSERS[domain]
            values = []
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                values.append(parse(line))
        if len(values) != n_max + 1:
            raise ValueError(f"sequence file {path} holds {len(values)} values, "
                             f"header says {n_max + 1}")
        return cls(name, tuple(values), domain)


_FORMATTERS = {
    DOMAIN_INTEGER: str,
    DOMAIN_RATIONAL: format_rational,
    DOMAIN_GAUSSIAN: format_gaussian,
}
_PARSERS = {
    DOMAIN_INTEGER: int,
    DOMAIN_RATIONAL: parse_rational,
    DOMAIN_GAUSSIAN: parse_gaussian,
}


@dataclass
class RecurrenceSpec:
    """a_n = sum_{k=1}^{n} c(n,k) a_{n-k} + b(n), from a_0."""

    coeff: Callable[[int, int], object]   # c(n, k), defined for 1 <= k <= n
    inhom: Callable[[int], object]        # b(n), defined for n >= 1
    a0: object
    domain: str = DOMAIN_INTEGER
    name: str = "recurrence"


def run_general_recurrence(spec: RecurrenceSpec, n_max: int) -> SequenceTable:
    """Drive a RecurrenceSpec; independent of the per-sequence fast paths."""
    a = [spec.a0]
    for n in range(1, n_max + 1):
        s = spec.inhom(n)
        for k in range(1, n + 1):
            c = spec.coeff(n, k)
            if c:
                s = s + c * a[n - k]
        a.append(s)
    return SequenceTable(spec.name, tuple(a), spec.domain)


def takeuchi_spec() -> RecurrenceSpec:
    """Shifted form: c(n,k) = C(n+k-2,n-1) - C(n+k-2,n), b(n) = sum Catalans."""
    def coeff(n, k):
        return comb(n + k - 2, n - 1) - comb(n + k - 2, n)

    def inhom(n):
        return sum(comb(2 * k, k) // (k + 1) for k in range(1, n + 1))

    return RecurrenceSpec(coeff, inhom, 0, DOMAIN_INTEGER, "takeuchi")


def bell_spec() -> RecurrenceSpec:
    return RecurrenceSpec(lambda n, k: comb(n - 1, k - 1), lambda n: 0, 1,
                          DOMAIN_INTEGER, "bell")


def family_spec(lam) -> RecurrenceSpec:
    """Shifted family form: c(n,k) = C(n-1 + lam*(k-1), k-1), b = 0, a_0 = 1."""
    domain = _lambda_domain(lam)

    def coeff(n, k):
        return binomial_general(n - 1 + lam * (k - 1), k - 1)

    return RecurrenceSpec(coeff, lambda n: 0, 1, domain, f"family({lam})")


def _lambda_domain(lam) -> str:
    if isinstance(lam, GaussianRational):
        return DOMAIN_GAUSSIAN
    if isinstance(lam, Fraction) and lam.denominator != 1:
        return DOMAIN_RATIONAL
    return DOMAIN_INTEGER


def takeuchi_numbers(n_max: int) -> SequenceTable:
    """T_0..T_N by the direct recurrence, all-integer fast path.

    The two binomials are carried along the k-diagonal by exact ratios
    (C(n+k,n) -> *(n+k)/k), so each coefficient costs O(1) bigint ops.
    """
    t = [0]
    cat = 1        # Catalan C_0
    catsum = 0     # sum_{k=1}^{n+1} C_k, updated per step
    for n in range(n_max):
        cat = cat * 2 * (2 * n + 1) // (n + 2)
        catsum += cat
        d = 1      # C(n+k, n) at k=0
        s = 0
        for k in range(n + 1):
            if k:
                d = d * (n + k) // k
            c = d - d * k // (n + 1)   # C(n+k,n) - C(n+k,n+1)
            if c:
                s += c * t[n - k]
        t.append(s + catsum)
    return SequenceTable("takeuchi", tuple(t), DOMAIN_INTEGER)


def bell_numbers(n_max: int) -> SequenceTable:
    b = [1]
    for n in range(n_max):
        row = 1    # C(n, 0)
        s = 0
        for k in range(n + 1):
            if k:
                row = row * (n - k + 1) // k
            s += row * b[n - k]
        b.append(s)
    return SequenceTable("bell", tuple(b), DOMAIN_INTEGER)


def catalan_numbers(n_max: int) -> SequenceTable:
    c = [1]
    for n in range(n_max):
        c.append(c[-1] * 2 * (2 * n + 1) // (n + 2))
    return SequenceTable("catalan", tuple(c), DOMAIN_INTEGER)


def catalan_partial_sums(n_max: int) -> SequenceTable:
    """b_n = sum_{k=1}^{n} C_k (the inhomogeneous Takeuchi term); b_0 = 0."""
    cat = catalan_numbers(n_max)
    out = [0]
    for n in range(1, n_max + 1):
        out.append(out[-1] + cat[n])
    return SequenceTable("catalan_partial", tuple(out), DOMAIN_INTEGER)


def family_numbers(n_max: int, lam) -> SequenceTable:
    """A_0..A_N for the binomial family at an exact parameter lam.

    The coefficient vector C(n + lam*k, k), k = 0..n is updated in n by the
    exact ratio (n+1+lam*k)/(n+1-k+lam*k); a vanishing denominator (possible
    for negative rational lam) falls back to the falling-factorial product.
    lam = 0 reproduces the Bell numbers; integer lam >= 0 stays on an
    all-integer path.
    """
    if isinstance(lam, Fraction) and lam.denominator == 1:
        lam = int(lam)
    domain = _lambda_domain(lam)
    int_path = isinstance(lam, int) and lam >= 0
    a = [1]
    cvec = []
    for n in range(n_max):
        for k in range(len(cvec)):
            x = n + lam * k
            den = x - k
            if int_path:
                cvec[k] = cvec[k] * x // den if den else comb(x, k)
            elif den == 0 or (isinstance(den, GaussianRational) and not den):
                cvec[k] = binomial_general(x, k)
            else:
                cvec[k] = cvec[k] * x / den
        k = len(cvec)
        cvec.append(binomial_general(n + lam * k, k))
        s = 0
        for k in range(n + 1):
            s = s + cvec[k] * a[n - k]
        a.append(s)
    if domain == DOMAIN_RATIONAL:
        a = [Fraction(v) for v in a]
    elif domain == DOMAIN_GAUSSIAN:
        a = [v if isinstance(v, GaussianRational) else GaussianRational(v)
             for v in a]
    return SequenceTable(f"family({lam})", tuple(a), domain)
