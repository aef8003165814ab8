"""Exact scalar and polynomial arithmetic.

Scalars are plain Python ints, `fractions.Fraction` (the exact rational
type used everywhere), `GaussianRational` (exact complex rationals), or
`LambdaPoly` (elements of Q[lam], optionally computed in the quotient ring
Q[lam]/(lam^(cap+1))).  `Poly` is a dense univariate polynomial over any
of these scalar rings; all operations are exact and all values immutable
in practice (nothing mutates after construction).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


# ---------------------------------------------------------------------------
# rational text format: "p/q" or "p"
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """Exact complex number a + b*i with rational a, b.

    Text format: "a/b+c/d*i" (the sign of the imaginary part folds into c).
    A full field: division goes through the conjugate and the norm.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        r = GaussianRational(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a/b+c/d*i" (also accepts "a/b-c/d*i", bare "a/b", bare "c/d*i")."""
    s = text.strip().replace(" ", "")
    if "i" not in s:
        return GaussianRational(parse_rational(s))
    s = s.rstrip("i").rstrip("*")
    # split at the last +/- that is not a leading sign and not inside "p/q"
    for pos in range(len(s) - 1, 0, -1):
        if s[pos] in "+-" and s[pos - 1] not in "+-/":
            re_part, im_part = s[:pos], s[pos:]
            break
    else:
        re_part, im_part = "0", s
    if im_part in ("+", "-", ""):
        im_part += "1"
    return GaussianRational(parse_rational(re_part), parse_rational(im_part))


def format_gaussian(z: GaussianRational) -> str:
    re, im = format_rational(z.re), format_rational(z.im)
    sign = "" if z.im < 0 else "+"
    return f"{re}{sign}{im}*i"


class LambdaPoly:
    """Element of Q[lam] (dense, lowest degree first).

    With ``cap`` set, arithmetic happens in the quotient ring
    Q[lam]/(lam^(cap+1)): every product is truncated at degree ``cap``.
    Mixing elements with different caps is an error; scalars lift freely.
    """

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs=(0,), cap: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if cap is not None:
            cs = cs[:cap + 1]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)
        self.cap = cap

    @staticmethod
    def lam(cap: int | None = None) -> "LambdaPoly":
        return LambdaPoly((0, 1), cap)

    def _coerce(self, other):
        if isinstance(other, LambdaPoly):
            if other.cap != self.cap:
                raise ValueError("mixing LambdaPoly caps")
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,), self.cap)
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def constant(self) -> Fraction:
        return self.coeffs[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly([-c for c in self.coeffs], self.cap)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        hi = len(a) + len(b) - 2
        if self.cap is not None:
            hi = min(hi, self.cap)
        out = [Fraction(0)] * (hi + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if i + j > hi:
                    break
                if bj:
                    out[i + j] += ai * bj
        return LambdaPoly(out, self.cap)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; Q[lam] is not a field
        if isinstance(other, (int, Fraction)):
            return LambdaPoly([c / other for c in self.coeffs], self.cap)
        if isinstance(other, LambdaPoly) and other.degree == 0:
            return self / other.coeffs[0]
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        r = LambdaPoly((1,), self.cap)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.degree == 0 and self.coeffs[0] == other
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return self.coeffs != (Fraction(0),)

    def div_lam(self) -> "LambdaPoly":
        """Exact division by lam; requires zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("not divisible by lam")
        if self.degree == 0:
            return LambdaPoly((0,), self.cap)
        return LambdaPoly(self.coeffs[1:], self.cap)

    def eval_at(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def uncapped(self) -> "LambdaPoly":
        return LambdaPoly(self.coeffs, None)

    def __repr__(self):
        return f"LambdaPoly({[str(c) for c in self.coeffs]})"


class Poly:
    """Dense univariate polynomial over an exact scalar ring.

    Coefficients are stored lowest degree first; the zero polynomial is
    ``[0]``.  Ring elements of different kinds must not be mixed inside one
    polynomial.  ``*`` multiplies two polynomials in the same variable;
    multiplying by a scalar goes through ``scale``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        cs = list(coeffs)
        while len(cs) > 1 and _is_zero(cs[-1]):
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and _is_zero(self.coeffs[0])

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = list(self.coeffs)
        bc = other.coeffs
        while len(out) < len(bc):
            out.append(0)
        for i, c in enumerate(bc):
            out[i] = out[i] - c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly([0])
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def scale(self, c) -> "Poly":
        return Poly([ci * c for ci in self.coeffs])

    def mul_x(self) -> "Poly":
        """Multiply by the variable."""
        if self.is_zero():
            return self
        return Poly((0,) + self.coeffs)

    def eval_at(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def _is_zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not bool(c)


def poly_shift_argument(p: Poly, delta: int = -1) -> Poly:
    """q with q(m) = p(m + delta), exactly; degree preserved.

    In-place Taylor shift: O(deg^2) ring additions (no multiplications for
    delta = +-1, the common case).
    """
    q = list(p.coeffs)
    n = len(q)
    if delta == -1:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                q[j] = q[j] - q[j + 1]
    elif delta == 1:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                q[j] = q[j] + q[j + 1]
    else:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                q[j] = q[j] + q[j + 1] * delta
    return Poly(q)


def lagrange_interpolate(points) -> Poly:
    """Unique polynomial of degree < len(points) through (node, value) pairs.

    Nodes are integers (pairwise distinct); values live in any scalar ring
    that supports division by ints.  Exact throughout.
    """
    points = list(points)
    nodes = [int(n) for n, _ in points]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate interpolation nodes")
    k = len(points)
    # master polynomial prod (x - x_i), integer coefficients
    master = [1]
    for x0 in nodes:
        master = [0] + master
        for i in range(len(master) - 1):
            master[i] -= master[i + 1] * x0
    out = [0] * k
    for x0, y0 in points:
        # numerator poly = master / (x - x0), by synthetic division
        num = [0] * k
        num[k - 1] = master[k]
        for i in range(k - 2, -1, -1):
            num[i] = master[i + 1] + num[i + 1] * x0
        denom = 0
        powx = 1
        for i in range(k):
            denom += num[i] * powx
            powx *= x0
        slice_ = y0 * Fraction(1, denom) if isinstance(y0, (int, Fraction)) \
            else y0 / denom
        for i in range(k):
            if num[i]:
                out[i] = out[i] + slice_ * num[i]
    return Poly(out)


def binomial_general(alpha, k: int):
    """binom(alpha, k) via the falling-factorial product, exact.

    alpha may be an int, Fraction, GaussianRational, or LambdaPoly; the
    result lives in the same ring (ints stay ints when the argument allows
    the closed-form binomial).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(alpha, int):
        return comb(alpha, k) if alpha >= 0 else _falling_int(alpha, k)
    prod = 1
    for j in range(k):
        prod = (alpha - j) * prod
    if isinstance(prod, int):
        return Fraction(prod, factorial(k))
    return prod / factorial(k)


def _falling_int(alpha: int, k: int) -> int:
    p = 1
    for j in range(k):
        p *= alpha - j
    # exact: product of k consecutive integers is divisible by k!
    return p // factorial(k)


def solve_linear_exact(rows, rhs):
    """Solve an overdetermined exact linear system A x = b.

    ``rows`` holds Fractions; ``rhs`` entries may live in any scalar ring
    closed under +,-, and multiplication by Fractions.  Gauss-Jordan with
    partial pivoting; raises ValueError on rank deficiency and
    ArithmeticError on inconsistency (a zero row with nonzero rhs).
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    A = [[Fraction(v) for v in r] for r in rows]
    b = list(rhs)
    piv_rows = []
    used = [False] * m
    for col in range(n):
        piv = None
        for r in range(m):
            if not used[r] and A[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError(f"rank deficient at column {col}")
        used[piv] = True
        piv_rows.append((col, piv))
        inv = 1 / A[piv][col]
        A[piv] = [v * inv for v in A[piv]]
        b[piv] = b[piv] * inv
        for r in range(m):
            if r != piv and A[r][col] != 0:
                f = A[r][col]
                A[r] = [vr - f * vp for vr, vp in zip(A[r], A[piv])]
                b[r] = b[r] - b[piv] * f
    x = [None] * n
    for col, r in piv_rows:
        x[col] = b[r]
    for r in range(m):
        if not used[r] and not _is_zero(b[r]):
            raise ArithmeticError(f"inconsistent equation at row {r}")
    return x
