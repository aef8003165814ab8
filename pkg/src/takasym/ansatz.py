"""The factorial-sum Ansatz pipeline.

For a recurrence a_n = sum_k c(n,k) a_{n-k} + b(n) whose coefficients are
polynomials in n of degree <= k, write a_n = (1/e) sum_m f_{m,n}/m!.
The f satisfy

    f_{m,n} = m * sum_{k=1}^{n} c(n,k) f_{m-1,n-k} + b(n),   f_{m,0} = a_0,

so each f_n is a polynomial in m of degree <= n (for the Bell recurrence
f_{m,n} = m^n exactly).  Expanding

    f_{m,n} = m^n sum_k d_{n,k} m^{-k},   d_{n,k} = n^k sum_l r_{k,l} n^{-l}

(d_{.,k} is a polynomial of degree <= k in n) and letting
r_l(v) = sum_k r_{l+k,l} v^k gives generating functions with a conjectured
exponential-polynomial shape; the fit recovers it exactly or reports that
the data falsifies it.

Shapes handled (pinned by exact overdetermined fits):

  * Takeuchi coefficients:  r_l(v) = e^{v^2/2} sum_{k=0}^{l-1} p_{l,k}(v)
    e^{(l-k)v}, deg p_{l,k} = 3k; lambda_l = p_{l,0} (a constant) and
    mu_l = lambda_l ((l-1)!)^3 comes out integral.
  * the one-parameter family, c(n,k) = C(n-1+lam(k-1), k-1):
    r_l(v) = e^{lam v^2/2 + lam v} [sum_{k=0}^{l-1} p_{l,k}(v) e^{(l-k)v}
    + p_{l,l}(v)], same degrees, with an extra polynomial term; with
    kappa_l = p_{l,0} the h-series is h(x) = log(sum_l kappa_l x^l)/lam.

The fit solves the linear system on the Borel transform S_m = m! s_m =
sum_j q_j(m) j^m by annihilator peeling (products of shift operators
E - j'), then re-expands and compares against every available coefficient;
any mismatch raises StructureFalsifiedError verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import InsufficientDepthError, StructureFalsifiedError
from .numerics import GaussianRational, LambdaPoly, Poly, binomial_general
from .sequences import SequenceTable, bell_numbers
from .series import TruncatedPowerSeries, series_exp

DEFAULT_SLACK = 10


# ---------------------------------------------------------------------------
# build specs
# ---------------------------------------------------------------------------

@dataclass
class AnsatzSpec:
    """Recurrence data plus the conjectured fit shape for its r_l(v)."""

    name: str
    a0: object
    gauss_gamma: object          # coefficient of v^2/2 in the prefactor
    linear_shift: object         # coefficient of v in the prefactor
    has_poly_term: bool          # e^{0v} polynomial term in the shape
    lam: object = None           # family parameter (None for Takeuchi)
    cap: int | None = None       # Q[lam] truncation cap (formal runs)

    def coeff_vector(self, n: int, prev):
        """c(n,k) for k = 1..n, updated incrementally from the n-1 vector."""
        raise NotImplementedError

    def inhom(self, n: int):
        raise NotImplementedError


class TakeuchiAnsatzSpec(AnsatzSpec):
    """c(n,k) = C(n+k-2,n-1) - C(n+k-2,n); b(n) = partial Catalan sums."""

    def __init__(self):
        super().__init__("takeuchi", 0, Fraction(1), Fraction(0), False)
        self._cat = [1]           # Catalan numbers, grown on demand
        self._catsum = [0]

    def coeff_vector(self, n, prev):
        out = []
        d = 1   # C(n+k-2, n-1) at k=1
        for k in range(1, n + 1):
            if k > 1:
                d = d * (n + k - 2) // (k - 1)
            out.append(d - d * (k - 1) // n)
        return out

    def inhom(self, n):
        while len(self._catsum) <= n:
            m = len(self._cat) - 1
            self._cat.append(self._cat[-1] * 2 * (2 * m + 1) // (m + 2))
            self._catsum.append(self._catsum[-1] + self._cat[-1])
        return self._catsum[n]


class FamilyAnsatzSpec(AnsatzSpec):
    """c(n,k) = C(n-1 + lam(k-1), k-1), b = 0, a_0 = 1.

    ``lam`` may be an exact number (concrete run) or None, in which case
    the run is formal over Q[lam] truncated at degree ``cap``.
    """

    def __init__(self, lam=None, cap: int | None = None):
        if lam is None:
            lam = LambdaPoly.lam(cap)
        gamma = lam if not isinstance(lam, int) else Fraction(lam)
        super().__init__(f"family({lam if not isinstance(lam, LambdaPoly) else 'lam'})",
                         1, gamma, gamma, True, lam=lam, cap=cap)

    def coeff_vector(self, n, prev):
        lam = self.lam
        out = []
        if prev is not None:
            # C(x+1, r) = C(x, r) (x+1)/(x+1-r), x = n-2+lam(k-1), r = k-1
            for k in range(1, n):
                c = prev[k - 1]
                if isinstance(lam, LambdaPoly):
                    c = c * LambdaPoly((n - 1, k - 1), lam.cap)
                    c = _div_linear(c, Fraction(n - k), Fraction(k - 1))
                else:
                    x1 = n - 1 + lam * (k - 1)
                    den = x1 - (k - 1)
                    if _zero(den):
                        c = binomial_general(x1, k - 1)
                    elif isinstance(c, int) and isinstance(x1, int):
                        c = c * x1 // den
                    else:
                        c = c * x1 / den
                out.append(c)
        else:
            for k in range(1, n):
                out.append(binomial_general(n - 1 + lam * (k - 1), k - 1))
        out.append(binomial_general(n - 1 + lam * (n - 1), n - 1))
        return out

    def inhom(self, n):
        return 0


def _div_linear(p: LambdaPoly, a: Fraction, b: Fraction) -> LambdaPoly:
    """Exact p / (a + b*lam) in Q[lam] (or its quotient ring); a != 0.

    Bottom-up power-series division; valid in the capped ring as is, and
    checked by re-multiplication in the exact ring.
    """
    if a == 0:
        raise ZeroDivisionError("linear divisor with zero constant term")
    cs = p.coeffs
    q = []
    prev = Fraction(0)
    for c in cs:
        prev = (c - b * prev) / a
        q.append(prev)
    result = LambdaPoly(q, p.cap)
    if p.cap is None and result * LambdaPoly((a, b), None) != p:
        raise ArithmeticError("inexact linear division in Q[lam]")
    return result


# ---------------------------------------------------------------------------
# depth planning
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DepthPlan:
    l_max: int
    unknowns: int      # fit unknowns at level l_max
    slack: int         # surplus series coefficients beyond the unknowns
    kv_count: int      # r_l series coefficients used at level l_max
    k_max: int         # deepest r_{k,l} row needed
    n_max: int         # deepest f_n needed


def fit_unknowns(l: int, has_poly_term: bool) -> int:
    top = l if has_poly_term else l - 1
    return sum(3 * k + 1 for k in range(top + 1))


def default_slack(l: int, has_poly_term: bool) -> int:
    # the peeling discards the first 3l+1 rows when a polynomial term exists
    return (3 * l + 3) if has_poly_term else DEFAULT_SLACK


def plan_depths(l_max: int, has_poly_term: bool,
                slack: int | None = None) -> DepthPlan:
    u = fit_unknowns(l_max, has_poly_term)
    s = default_slack(l_max, has_poly_term) if slack is None else slack
    kv = u + s
    k_max = l_max + kv - 1
    return DepthPlan(l_max, u, s, kv, k_max, 2 * k_max + 2)


# ---------------------------------------------------------------------------
# f table and coefficient extraction
# ---------------------------------------------------------------------------

@dataclass
class AnsatzTable:
    spec: AnsatzSpec
    f: list                      # f[n] = Poly in m
    r: dict = field(default_factory=dict)   # k -> [r_{k,l} for l <= l_max]
    l_max: int = 0

    def d_value(self, n: int, k: int):
        """d_{n,k}: coefficient of m^{n-k} in f_n (0 <= k <= n)."""
        if not 0 <= k <= n:
            raise ValueError("need 0 <= k <= n")
        return self.f[n].coeff(n - k)


def build_f(spec: AnsatzSpec, n_max: int) -> AnsatzTable:
    """f_0..f_{n_max} as exact polynomials in m.

    Shifted copies f_j(m-1) are cached so each step is a multiply-add
    sweep; the coefficient vectors are updated incrementally in n.
    """
    f = [Poly([spec.a0])]
    shifted = [_shift_poly_minus1(f[0])]
    cvec = None
    for n in range(1, n_max + 1):
        cvec = spec.coeff_vector(n, cvec)
        acc = [0] * n
        for k in range(1, n + 1):
            c = cvec[k - 1]
            if _zero(c):
                continue
            g = shifted[n - k].coeffs
            for i, gi in enumerate(g):
                if not _zero(gi):
                    acc[i] = acc[i] + c * gi
        b = spec.inhom(n)
        fn = Poly([b] + acc)      # multiply the sum by m, then add b
        f.append(fn)
        shifted.append(_shift_poly_minus1(fn))
    return AnsatzTable(spec, f)


def _shift_poly_minus1(p: Poly) -> Poly:
    q = list(p.coeffs)
    n = len(q)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            q[j] = q[j] - q[j + 1]
    return Poly(q)


def _zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not bool(c)


def verify_f_consistency(table: AnsatzTable, reference: SequenceTable,
                         n_check: int) -> None:
    """(1/e) sum_m f_{m,n}/m! == a_n, checked EXACTLY via sum_j c_j B_j.

    (sum_m m^j/m! = e B_j turns the factorial sum into a finite Bell
    combination, so no numerics are involved at all.)
    """
    deg = max(table.f[n].degree for n in range(n_check + 1))
    bell = bell_numbers(deg)
    for n in range(n_check + 1):
        total = 0
        for j, c in enumerate(table.f[n].coeffs):
            if not _zero(c):
                total = total + c * bell[j]
        if not _zero(total - reference[n]):
            raise StructureFalsifiedError(
                f"factorial-sum consistency fails at n={n}: "
                f"{total} != {reference[n]}")


def extract_r_table(table: AnsatzTable, k_max: int, l_max: int,
                    extra: int = 2) -> None:
    """Fill r_{k,l} for k <= k_max, l <= min(l_max, k), in place.

    d_{.,k} is sampled at the k+1+extra consecutive points n = k..2k+extra;
    the claim deg_n d_{.,k} <= k is certified by the vanishing of the extra
    forward differences (exactly the two-surplus-points check), then the
    top l_max+1 monomial coefficients of the Newton form are assembled from
    elementary symmetric functions of the nodes.  Integer arithmetic until
    the final division by t!.
    """
    need = 2 * k_max + extra
    if len(table.f) - 1 < need:
        raise InsufficientDepthError(
            f"f table to n={len(table.f)-1}, need n={need}", required=need)
    for k in range(k_max + 1):
        npts = k + 1 + extra
        vals = [table.d_value(k + i, k) for i in range(npts)]
        diffs = [vals]
        for _ in range(npts - 1):
            prev = diffs[-1]
            diffs.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
        for t in range(k + 1, npts):
            for i, v in enumerate(diffs[t]):
                if not _zero(v):
                    raise StructureFalsifiedError(
                        f"deg_n d(.,{k}) exceeds {k}: order-{t} difference "
                        f"at offset {i} is {v}")
        top = [diffs[t][0] for t in range(k + 1)]
        table.r[k] = _newton_top_coeffs(top, k, min(l_max, k))
    table.l_max = max(table.l_max, l_max)


def _newton_top_coeffs(deltas, k: int, l_max: int) -> list:
    """Coefficients of n^(k-l), l = 0..l_max, of sum_t deltas[t] C(n-k, t).

    Nodes are k, k+1, ...; C(n-k, t) = prod_{i=0}^{t-1}(n-k-i)/t!, whose
    n^(t-s) coefficient is (-1)^s e_s(k, .., k+t-1)/t!.
    """
    out = []
    for l in range(l_max + 1):
        tot = Fraction(0)
        for t in range(k - l, k + 1):
            if t < 0:
                continue
            s = t - (k - l)
            e = _elementary_symmetric(k, t, s)
            term = deltas[t] * Fraction((-1) ** s * e, factorial(t))
            tot = term + tot
        out.append(tot)
    return out


def _elementary_symmetric(start: int, count: int, s: int) -> int:
    """e_s of the integers start, start+1, ..., start+count-1."""
    e = [1] + [0] * s
    for r in range(start, start + count):
        for u in range(min(s, len(e) - 1), 0, -1):
            e[u] += e[u - 1] * r
    return e[s]


def rl_series(table: AnsatzTable, l: int, kv_count: int) -> list:
    """Coefficients of r_l(v) = sum_k r_{l+k,l} v^k, k < kv_count."""
    need = l + kv_count - 1
    have = max(table.r) if table.r else -1
    if need > have or l > table.l_max:
        raise InsufficientDepthError(
            f"r table to k={have} (l_max={table.l_max}); "
            f"need k={need}, l={l}", required=need)
    return [table.r[l + k][l] for k in range(kv_count)]


# ---------------------------------------------------------------------------
# exponential-polynomial fit (annihilator peeling + exhaustive verification)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpPolyCombination:
    """e^{gamma v^2/2 + shift v} * sum_j p_j(v) e^{jv}, exact coefficients.

    ``terms`` maps the integer shift j (j >= 1) to the polynomial p_j;
    ``poly_term`` is the j = 0 polynomial (None when the shape has none).
    """

    gauss_gamma: object
    linear_shift: object
    terms: tuple                 # ((j, Poly), ...) descending j
    poly_term: Poly | None = None

    def p(self, j: int) -> Poly:
        if j == 0:
            if self.poly_term is None:
                raise KeyError("no polynomial term in this combination")
            return self.poly_term
        for jj, pp in self.terms:
            if jj == j:
                return pp
        raise KeyError(f"no e^{j}v term")

    @property
    def leading_constant(self):
        """Constant coefficient of the highest-shift polynomial."""
        return self.terms[0][1].coeff(0) if self.terms else \
            (self.poly_term.coeff(0) if self.poly_term else 0)


def _ring_div_int(v, d: int):
    if isinstance(v, int):
        return Fraction(v, d)
    return v / d


def fit_exp_poly(series_coeffs, l: int, gauss_gamma, linear_shift,
                 has_poly_term: bool) -> ExpPolyCombination:
    """Fit sum_{k} p_{l,k}(v) e^{(l-k)v} (+ p_{l,l}(v) if has_poly_term)
    to e^{-gamma v^2/2 - shift v} * r_l(v), deg p_{l,k} = 3k, exactly.

    Works on the Borel transform S_m = m! s_m = sum_j q_j(m) j^m, isolating
    each component with shift-operator annihilators; the reconstruction is
    then re-expanded and compared against EVERY available coefficient and
    any mismatch raises StructureFalsifiedError.
    """
    kv = len(series_coeffs)
    order = kv - 1
    # strip the prefactor
    u = TruncatedPowerSeries(
        [0, -linear_shift, -_ring_div_int(gauss_gamma, 2)], order)
    stripped = series_exp(u) * TruncatedPowerSeries(series_coeffs, order)
    S = [stripped.coeffs[m] * factorial(m) for m in range(kv)]

    shifts = list(range(l, 0, -1))
    degs = {l - k: 3 * k for k in range(l)}
    d0 = 3 * l if has_poly_term else -1
    unknowns = fit_unknowns(l, has_poly_term)
    if kv < unknowns + 1:
        raise InsufficientDepthError(
            f"need at least {unknowns + 1} series coefficients, got {kv}",
            required=unknowns + 1)

    polys = {}
    for j in shifts:
        seq = S[d0 + 1:] if d0 >= 0 else list(S)   # E^(d0+1) drops the poly part
        ops = []
        for jp in shifts:
            if jp == j:
                continue
            for _ in range(degs[jp] + 1):
                seq = [seq[m + 1] - jp * seq[m] for m in range(len(seq) - 1)]
                ops.append(jp)
        d = degs[j]
        if len(seq) < d + 1:
            raise InsufficientDepthError(
                f"not enough rows to isolate the e^{j}v component",
                required=unknowns + d + 2)
        # seq[m] = (transformed q_j)(m + offset) * j^(m + offset) with the
        # E-shift offset folded in; normalize by j^m and interpolate.
        offset = d0 + 1 if d0 >= 0 else 0
        w = _interp_poly([(m, _ring_div_int(seq[m], j ** (m + offset)))
                          for m in range(d + 1)])
        # undo the operator maps q -> j q(x+1) - jp q(x), last applied first
        for jp in reversed(ops):
            w = _unapply_shift_op(w, j, jp)
        if offset:
            w = _unapply_shift_op(w, j, None, offset)
        # q_j(m) = sum_a (c_a / j^a) falling(m, a): falling-basis -> c_a
        gam = _monomial_to_falling(w)
        p = Poly([g * j ** a for a, g in enumerate(gam)])
        if p.degree > d:
            raise StructureFalsifiedError(
                f"e^{j}v polynomial degree {p.degree} exceeds {d}")
        polys[j] = p

    # reconstruct and verify every row
    recon = [0] * kv
    for j, p in polys.items():
        for m in range(kv):
            q = 0
            for a, c in enumerate(p.coeffs):
                q = q + _ring_div_int(c * _falling(m, a), j ** a)
            recon[m] = recon[m] + q * j ** m
    resid = [S[m] - recon[m] for m in range(kv)]
    poly_term = None
    if has_poly_term:
        for m in range(d0 + 1, kv):
            if not _zero(resid[m]):
                raise StructureFalsifiedError(
                    f"residual after exponential terms not supported on "
                    f"deg<={d0}: S_{m} mismatch {resid[m]}")
        poly_term = Poly([_ring_div_int(resid[a], factorial(a))
                          for a in range(d0 + 1)])
    else:
        for m in range(kv):
            if not _zero(resid[m]):
                raise StructureFalsifiedError(
                    f"exact re-expansion fails at coefficient {m}: "
                    f"residual {resid[m]}")
    return ExpPolyCombination(gauss_gamma, linear_shift,
                              tuple((j, polys[j]) for j in shifts), poly_term)


def _falling(m: int, a: int) -> int:
    r = 1
    for i in range(a):
        r *= m - i
    return r


def _interp_poly(points) -> Poly:
    """Newton interpolation on consecutive integer nodes 0..d (ring values)."""
    vals = [v for _, v in points]
    d = len(vals) - 1
    divided = []
    for t in range(d + 1):
        divided.append(vals[0])
        vals = [_ring_div_int(vals[i + 1] - vals[i], t + 1)
                for i in range(len(vals) - 1)]
    out = [0] * (d + 1)
    cur = [1]
    for t in range(d + 1):
        c = divided[t]
        if not _zero(c):
            for i, cv in enumerate(cur):
                out[i] = out[i] + c * cv
        nxt = [0] + cur
        for i in range(len(nxt) - 1):
            nxt[i] = nxt[i] - t * nxt[i + 1]
        cur = nxt
    return Poly(out)


def _unapply_shift_op(w: Poly, j: int, jp: int | None,
                      power: int = 1) -> Poly:
    """Invert q -> j q(x+1) - jp q(x); with jp None, invert the pure
    argument shift w(x) = q(x+power) (the j-powers were already divided
    out when the sequence was normalized by j^(m+offset))."""
    if jp is None:
        q = list(w.coeffs)
        n = len(q)
        for _ in range(power):
            for i in range(n - 1):
                for t in range(n - 2, i - 1, -1):
                    q[t] = q[t] - q[t + 1]
        return Poly(q)
    d = w.degree
    q = [0] * (d + 1)
    for t in range(d, -1, -1):
        acc = w.coeff(t)
        for i in range(t + 1, d + 1):
            acc = acc - (q[i] * (j * comb(i, t)))
        q[t] = _ring_div_int(acc, j - jp)
    return Poly(q)


def _monomial_to_falling(w: Poly) -> list:
    """gamma_a with w(x) = sum_a gamma_a x(x-1)...(x-a+1): divided
    differences of w at 0..deg."""
    d = w.degree
    vals = [w.eval_at(m) for m in range(d + 1)]
    out = []
    for t in range(d + 1):
        out.append(vals[0])
        vals = [_ring_div_int(vals[i + 1] - vals[i], t + 1)
                for i in range(len(vals) - 1)]
    return out


# ---------------------------------------------------------------------------
# lambda table, h series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaTable:
    """Leading fit constants lambda_l = p_{l,0}(0) and mu_l = lambda_l ((l-1)!)^3."""

    values: tuple                # lambda_0 .. lambda_l_max
    fits: tuple                  # ExpPolyCombination per level (index = l)

    @property
    def l_max(self) -> int:
        return len(self.values) - 1

    def mu(self, l: int):
        if l == 0:
            return self.values[0] * 0
        return self.values[l] * factorial(l - 1) ** 3

    def mu_all_integral(self) -> bool:
        for l in range(1, self.l_max + 1):
            m = self.mu(l)
            if isinstance(m, Fraction) and m.denominator != 1:
                return False
            if isinstance(m, LambdaPoly) and any(
                    c.denominator != 1 for c in m.coeffs):
                return False
        return True


def fit_level(table: AnsatzTable, l: int,
              slack: int | None = None) -> ExpPolyCombination:
    """Run the shape fit for one level l of an extracted r table."""
    spec = table.spec
    kv = fit_unknowns(l, spec.has_poly_term) + \
        (default_slack(l, spec.has_poly_term) if slack is None else slack)
    coeffs = rl_series(table, l, kv)
    return fit_exp_poly(coeffs, l, spec.gauss_gamma, spec.linear_shift,
                        spec.has_poly_term)


def prepare_table(spec: AnsatzSpec, l_max: int,
                  slack: int | None = None) -> AnsatzTable:
    """build_f + extract_r at the depths required for levels 0..l_max."""
    plan = plan_depths(l_max, spec.has_poly_term, slack)
    table = build_f(spec, plan.n_max)
    extract_r_table(table, plan.k_max, l_max)
    return table


def lambda_table(spec: AnsatzSpec, l_max: int,
                 table: AnsatzTable | None = None) -> LambdaTable:
    if table is None:
        table = prepare_table(spec, l_max)
    fits = []
    values = []
    for l in range(l_max + 1):
        fit = fit_level(table, l)
        fits.append(fit)
        values.append(fit.leading_constant if l > 0 else
                      (fit.poly_term.coeff(0) * 0 if fit.poly_term else
                       Fraction(0)))
    # lambda_0 is the constant term of the l=0 component itself
    if spec.has_poly_term and fits[0].poly_term is not None:
        values[0] = fits[0].poly_term.coeff(0)
    return LambdaTable(tuple(values), tuple(fits))


def h_partial_sums(values) -> list:
    """Running exact sums of lambda_0..lambda_L for each L."""
    out = []
    acc = Fraction(0)
    for v in values:
        acc = acc + v
        out.append(acc)
    return out


def kappa_series(spec: AnsatzSpec, l_max: int,
                 table: AnsatzTable | None = None) -> list:
    """kappa_l = p_{l,0}(0) for the family shape, l = 0..l_max."""
    lt = lambda_table(spec, l_max, table)
    out = [lt.values[0]]
    for l in range(1, l_max + 1):
        out.append(lt.fits[l].leading_constant)
    return out


def h_series_family(l_max: int, lam=None, cap: int | None = None) -> list:
    """Coefficients of h(x) = log(sum_l kappa_l x^l)/lam for x^1..x^{l_max}.

    ``lam`` None runs formally over Q[lam]; the quotient-ring cap defaults
    to 2*l_max + 4, comfortably above the observed degree 2l of kappa_l
    (the independent concrete-lam interpolation route certifies the degree
    bound, see tests).  Concrete lam != 0 gives exact rationals.
    """
    if lam is None and cap is None:
        cap = 2 * l_max + 4
    spec = FamilyAnsatzSpec(lam, cap)
    kappas = kappa_series(spec, l_max)
    if not _zero(kappas[0] - 1):
        raise StructureFalsifiedError(
            f"kappa_0 = {kappas[0]}, expected 1; h-series undefined")
    H = TruncatedPowerSeries(kappas, l_max)
    logH = _series_log_ring(H)
    out = []
    for k in range(1, l_max + 1):
        c = logH.coeffs[k]
        if lam is None:
            out.append(c.div_lam().uncapped() if isinstance(c, LambdaPoly)
                       else LambdaPoly((0,)))
        else:
            out.append(_div_exact_by(c, lam))
    return out


def _div_exact_by(value, lam):
    if isinstance(value, int):
        return Fraction(value, 1) / lam
    return value / lam


def _series_log_ring(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """log of a series with constant term 1 over any ring (int divisions)."""
    k = f.order
    u = [0] * (k + 1)
    for m in range(k):
        acc = f.coeffs[m + 1] * (m + 1)
        for i in range(m):
            ui = u[i + 1]
            if not _zero(ui):
                acc = acc - (ui * (i + 1)) * f.coeffs[m - i]
        u[m + 1] = _ring_div_int(acc, m + 1)
    return TruncatedPowerSeries(u, k)
