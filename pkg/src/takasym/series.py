"""Exact truncated power series and the generating-function identity checks.

A TruncatedPowerSeries holds exact coefficients c_0..c_K (order K means
"known modulo z^(K+1)").  Binary operations truncate to the smaller order;
equality compares coefficients through the common order.  Coefficients may
be Fractions, GaussianRationals, or LambdaPoly ring elements -- exp/log and
the fixed-point solver only ever divide by integers, so they stay inside
the ring.

The verification entry points check, coefficient by coefficient:

  * Knuth's functional equation for the Takeuchi generating function
    T(z) = (C(z)-1)/(1-z) + z(2-C(z))/sqrt(1-4z) * T(zC(z)) and its
    transformed sibling T(z) = (1/z) T(z-z^2) - 1/((1-z)(1-z+z^2)),
    both exact order by order even though T(z) diverges numerically;
  * the binomial-sum identity
    sum_k C(n+(lam+1)k, k) z^k = {sum_k C((lam+1)k,k) z^k}
                                 * {sum_k C((lam+1)k,k) z^k/(1+lam k)}^n
    together with its two substitution lemmas in terms of y(z) solving
    y = z (1+y)^(lam+1);
  * the family functional equation A(z) = 1 + z(1+y)/(1-lam y) A(z(1+y));
  * the Bell EGF  sum B_n z^n / n! = exp(e^z - 1);
  * the central-binomial special case sum_k C(n+2k,k) z^k = C(z)^n/sqrt(1-4z).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .numerics import binomial_general
from .sequences import (SequenceTable, bell_numbers, catalan_numbers,
                        family_numbers, takeuchi_numbers)


class TruncatedPowerSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[:order + 1]
        while len(cs) < order + 1:
            cs.append(0)
        self.coeffs = tuple(cs)
        self.order = order

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries([0], order)

    @staticmethod
    def one(order: int) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries([1], order)

    @staticmethod
    def x(order: int) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries([0, 1], order)

    @staticmethod
    def from_table(table: SequenceTable, order: int) -> "TruncatedPowerSeries":
        if table.n_max < order:
            raise ValueError(f"table {table.name} too short for order {order}")
        return TruncatedPowerSeries(table.values[:order + 1], order)

    # -- ring operations ------------------------------------------------------

    def _common(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = self._common(other)
        return TruncatedPowerSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], k)

    def __sub__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = self._common(other)
        return TruncatedPowerSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], k)

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        k = self._common(other)
        out = [0] * (k + 1)
        for i, a in enumerate(self.coeffs[:k + 1]):
            if _zero(a):
                continue
            for j in range(k + 1 - i):
                b = other.coeffs[j]
                if not _zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedPowerSeries(out, k)

    def scale(self, c) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries([ci * c for ci in self.coeffs], self.order)

    def shift_up(self, k: int = 1) -> "TruncatedPowerSeries":
        """Multiply by z^k (order grows with the shift)."""
        return TruncatedPowerSeries((0,) * k + self.coeffs, self.order + k)

    def shift_down(self, k: int = 1) -> "TruncatedPowerSeries":
        """Divide by z^k; the low coefficients must vanish."""
        if any(not _zero(c) for c in self.coeffs[:k]):
            raise ValueError("series not divisible by z^k")
        return TruncatedPowerSeries(self.coeffs[k:], self.order - k)

    def reciprocal(self) -> "TruncatedPowerSeries":
        c0 = self.coeffs[0]
        if _zero(c0):
            raise ValueError("reciprocal requires a unit constant term")
        inv0 = _invert_const(c0)
        k = self.order
        out = [inv0] + [0] * k
        for m in range(1, k + 1):
            acc = 0
            for i in range(1, m + 1):
                ci = self.coeffs[i]
                if not _zero(ci):
                    acc = acc + ci * out[m - i]
            out[m] = -inv0 * acc if isinstance(acc, (int, Fraction)) else -(acc * inv0)
        return TruncatedPowerSeries(out, k)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer series powers")
        r = TruncatedPowerSeries.one(self.order)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        """Coefficientwise equality through the common order."""
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def first_mismatch(self, other) -> int | None:
        k = self._common(other)
        for i in range(k + 1):
            d = self.coeffs[i] - other.coeffs[i]
            if not _zero(d):
                return i
        return None

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"Series[{head}{tail}; K={self.order}]"


def _zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not bool(c)


def _invert_const(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


# ---------------------------------------------------------------------------
# transcendental series (formal; integer divisions only)
# ---------------------------------------------------------------------------

def series_exp(u: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """exp of a series with zero constant term."""
    if not _zero(u.coeffs[0]):
        raise ValueError("series_exp needs zero constant term")
    k = u.order
    y = [1] + [0] * k
    for m in range(k):
        # (m+1) y_{m+1} = sum_{i} (i+1) u_{i+1} y_{m-i}
        acc = 0
        for i in range(m + 1):
            ui = u.coeffs[i + 1]
            if not _zero(ui):
                acc = acc + (ui * (i + 1)) * y[m - i]
        y[m + 1] = acc * Fraction(1, m + 1) if isinstance(acc, int) else acc / (m + 1)
    return TruncatedPowerSeries(y, k)


def series_log(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """log of a series with constant term 1."""
    if not _zero(f.coeffs[0] - 1):
        raise ValueError("series_log needs constant term 1")
    k = f.order
    u = [0] * (k + 1)
    for m in range(k):
        # (m+1) f_{m+1} = sum_{i=0}^{m} (i+1) u_{i+1} f_{m-i}   (f' = u' f)
        acc = f.coeffs[m + 1] * (m + 1)
        for i in range(m):
            ui = u[i + 1]
            if not _zero(ui):
                acc = acc - (ui * (i + 1)) * f.coeffs[m - i]
        u[m + 1] = acc * Fraction(1, m + 1) if isinstance(acc, int) else acc / (m + 1)
    return TruncatedPowerSeries(u, k)


def series_pow_exact(f: TruncatedPowerSeries, alpha) -> TruncatedPowerSeries:
    """f^alpha = exp(alpha * log f) for an exact (possibly formal) exponent.

    Requires constant term 1; alpha may be an int, Fraction, Gaussian
    rational, or LambdaPoly.
    """
    if isinstance(alpha, int) and alpha >= 0:
        return f ** alpha
    return series_exp(series_log(f).scale(alpha))


def series_compose(f: TruncatedPowerSeries,
                   g: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """(f o g) through the common order; g must have zero constant term."""
    if not _zero(g.coeffs[0]):
        raise ValueError("composition requires zero constant term in g")
    k = min(f.order, g.order)
    acc = TruncatedPowerSeries.zero(k)
    # Horner over f's coefficients, highest first
    for c in reversed(f.coeffs[:k + 1]):
        acc = acc * g
        if not _zero(c):
            acc = acc + TruncatedPowerSeries([c], k)
    return acc


def series_sqrt_one_minus_4z(order: int) -> TruncatedPowerSeries:
    """sqrt(1-4z) = 1 - 2 sum_{j>=1} C_{j-1} z^j, via the binomial series."""
    coeffs = [binomial_general(Fraction(1, 2), j) * (-4) ** j
              for j in range(order + 1)]
    return TruncatedPowerSeries(coeffs, order)


def series_catalan(order: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries.from_table(catalan_numbers(order), order)


def solve_y(lam, order: int) -> TruncatedPowerSeries:
    """The unique series y(z), y(0) = 0, with y = z (1+y)^(lam+1).

    Fixed-point iteration; each pass fixes one more coefficient, so
    ``order`` passes suffice.
    """
    one = TruncatedPowerSeries.one(order)
    z = TruncatedPowerSeries.x(order)
    y = TruncatedPowerSeries.zero(order)
    for _ in range(order + 1):
        y = z * series_pow_exact(one + y, lam + 1)
    return y


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    first_failing_order: int | None = None
    note: str = ""

    def as_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed,
             "first_failing_order": self.first_failing_order}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class VerificationReport:
    what: str
    order: int
    params: dict = field(default_factory=dict)
    clauses: tuple = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def as_dict(self) -> dict:
        return {"what": self.what, "order": self.order,
                "params": {k: str(v) for k, v in self.params.items()},
                "passed": self.passed,
                "clauses": [c.as_dict() for c in self.clauses]}


def _clause(name: str, lhs: TruncatedPowerSeries, rhs: TruncatedPowerSeries,
            note: str = "") -> ClauseResult:
    miss = lhs.first_mismatch(rhs)
    return ClauseResult(name, miss is None, miss, note)


def verify_takeuchi_functional_equation(order: int,
                                        t_table: SequenceTable | None = None
                                        ) -> VerificationReport:
    """Both forms of the Takeuchi functional equation through z^order."""
    if t_table is None:
        t_table = takeuchi_numbers(order + 1)
    k = order
    t = TruncatedPowerSeries.from_table(t_table, k)
    one = TruncatedPowerSeries.one(k)
    z = TruncatedPowerSeries.x(k)
    cat = series_catalan(k)
    sq = series_sqrt_one_minus_4z(k)

    # direct form: T = (C-1)/(1-z) + z(2-C)/sqrt(1-4z) * T(zC)
    zc = (z * cat)
    rhs1 = (cat - one) / (one - z) + \
        (z * (one.scale(2) - cat) / sq) * series_compose(t, zc)
    c1 = _clause("direct", t, rhs1)

    # transformed form: T = (1/z) T(z - z^2) - 1/((1-z)(1-z+z^2))
    t_hi = TruncatedPowerSeries.from_table(t_table, k + 1)
    g = TruncatedPowerSeries([0, 1, -1], k + 1)
    inner = series_compose(t_hi, g).shift_down(1)
    den = TruncatedPowerSeries([1, -1], k) * TruncatedPowerSeries([1, -1, 1], k)
    rhs2 = inner - den.reciprocal()
    c2 = _clause("transformed", t, rhs2)

    return VerificationReport("takfunc", order, {}, (c1, c2))


def _binomial_sum(a_of_k, order: int) -> TruncatedPowerSeries:
    return TruncatedPowerSeries([a_of_k(j) for j in range(order + 1)], order)


def _div_exact(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def verify_identity(lam, n: int, order: int) -> VerificationReport:
    """The three clauses of the binomial-sum identity at exact lam.

    (a) sum_k C((lam+1)k, k) z^k / (1+lam k) = 1 + y
    (b) sum_k C(n+(lam+1)k, k) z^k = (1+y)^(n+1) / (1 - lam y)
    (c) the product identity itself.
    """
    k = order
    one = TruncatedPowerSeries.one(k)
    y = solve_y(lam, k)
    oy = one + y

    lhs_a = _binomial_sum(
        lambda j: _div_exact(binomial_general((lam + 1) * j, j), 1 + lam * j), k)
    ca = _clause("substitution-a", lhs_a, oy)

    lhs_b = _binomial_sum(
        lambda j: binomial_general(n + (lam + 1) * j, j), k)
    rhs_b = series_pow_exact(oy, n + 1) * (one - y.scale(lam)).reciprocal()
    cb = _clause("substitution-b", lhs_b, rhs_b)

    base = _binomial_sum(lambda j: binomial_general((lam + 1) * j, j), k)
    rhs_c = base * series_pow_exact(lhs_a, n)
    cc = _clause("identity", lhs_b, rhs_c)

    return VerificationReport("ident", order, {"lambda": lam, "n": n},
                              (ca, cb, cc))


def verify_family_functional_equation(lam, order: int,
                                      a_table: SequenceTable | None = None
                                      ) -> VerificationReport:
    """A(z) = 1 + z (1+y)/(1 - lam y) A(z(1+y)), with y = y(z)."""
    k = order
    if a_table is None:
        a_table = family_numbers(k, lam)
    a = TruncatedPowerSeries.from_table(a_table, k)
    one = TruncatedPowerSeries.one(k)
    z = TruncatedPowerSeries.x(k)
    y = solve_y(lam, k)
    oy = one + y
    rhs = one + (z * oy * (one - y.scale(lam)).reciprocal()) * \
        series_compose(a, z * oy)
    return VerificationReport("family", order, {"lambda": lam},
                              (_clause("functional-equation", a, rhs),))


def verify_bell_egf(order: int) -> VerificationReport:
    """sum B_n z^n / n! = exp(e^z - 1)."""
    k = order
    b = bell_numbers(k)
    lhs = TruncatedPowerSeries(
        [Fraction(b[n], factorial(n)) for n in range(k + 1)], k)
    ez_minus_1 = TruncatedPowerSeries(
        [0] + [Fraction(1, factorial(n)) for n in range(1, k + 1)], k)
    rhs = series_exp(ez_minus_1)
    return VerificationReport("bell-egf", order, {},
                              (_clause("egf", lhs, rhs),))


def verify_special_case_identity(n: int, order: int) -> VerificationReport:
    """sum_k C(n+2k, k) z^k = C(z)^n / sqrt(1-4z).

    The printed source of this identity carries the exponent "k" on C(z);
    that reading is dimensionally broken (k is the summation index), so the
    n-form is what gets verified, and the note records the discrepancy.
    """
    k = order
    lhs = _binomial_sum(lambda j: binomial_general(n + 2 * j, j), k)
    rhs = series_catalan(k) ** n * series_sqrt_one_minus_4z(k).reciprocal()
    note = ("verified with exponent n; the k-exponent form does not "
            "typecheck (k is the summation index)")
    return VerificationReport("special", order, {"n": n},
                              (_clause("central-binomial", lhs, rhs, note),))
