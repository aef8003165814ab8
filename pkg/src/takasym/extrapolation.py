"""Sequence acceleration and constant extraction.

``accelerate`` provides the classic transforms (iterated Aitken, Wynn's
epsilon algorithm, Richardson extrapolation toward 0 in an explicit scale
variable).  On the Takeuchi/Bell ratio data those cap out near 1e-7..1e-10
because the error expansion sum_k R_k(w) e^{-kw} carries slowly varying
rational-in-w coefficients, so the production estimators use generalized
scale elimination instead: least-squares annihilation of the basis

    { e^{-k w} * T_i(affine(1/(1+w))) :  k = 2..kmax, i = 0..imax }

(Chebyshev recombination keeps the per-k blocks well conditioned).  Running
several independent window/basis settings plus a depth ladder gives the
agreement numbers that define ``stable_digits``; the classic transforms are
still run and recorded in the method trace as corroboration.

Sampling uses n_j = round(w_j e^{w_j}) with w_j arithmetic, which makes the
e^{-kw} error modes near-geometric (and the n_j approximately geometric).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp as _fexp

from mpmath import mp, mpf, matrix, qr_solve, lu_solve, workprec

from .bigfloat import agree_digits, check_precision, format_bigfloat, to_mpf
from .errors import BranchTrackingError, PrecisionStarvationError
from .numerics import GaussianRational
from .sequences import SequenceTable
from .asymptotics import w_value


# ---------------------------------------------------------------------------
# classic transforms (the `accelerate` op)
# ---------------------------------------------------------------------------

def accelerate(seq, method: str, x=None) -> list:
    """Acceleration tableau columns for a sequence of high-precision reals.

    methods: "aitken" (iterated Delta^2), "wynn" (epsilon algorithm, even
    columns), "richardson-in-x" (Neville toward 0 in the supplied strictly
    decreasing positive scale x).  Columns are NaN-free: degenerate
    denominators propagate the already-converged entry.
    """
    seq = list(seq)
    if len(seq) < 3:
        raise ValueError("need at least 3 terms")
    if method == "aitken":
        cols = [seq]
        cur = seq
        while len(cur) >= 3:
            nxt = []
            for i in range(len(cur) - 2):
                d2 = cur[i + 2] - 2 * cur[i + 1] + cur[i]
                if d2 == 0:
                    nxt.append(cur[i + 2])
                else:
                    nxt.append(cur[i + 2] - (cur[i + 2] - cur[i + 1]) ** 2 / d2)
            cols.append(nxt)
            cur = nxt
        return cols
    if method == "wynn":
        cols = [seq]
        eps_prev = [0] * (len(seq) + 1)
        eps_cur = seq
        col = 1
        while len(eps_cur) >= 2:
            nxt = []
            for i in range(len(eps_cur) - 1):
                d = eps_cur[i + 1] - eps_cur[i]
                if d == 0:
                    nxt.append(eps_prev[i + 1])
                else:
                    nxt.append(eps_prev[i + 1] + 1 / d)
            col += 1
            if col % 2 == 1:
                cols.append(nxt)
            eps_prev, eps_cur = eps_cur, nxt
        return cols
    if method == "richardson-in-x":
        if x is None:
            raise ValueError("richardson-in-x needs the scale sequence x")
        x = list(x)
        if len(x) != len(seq):
            raise ValueError("x and seq lengths differ")
        if any(not (a > b > 0) for a, b in zip(x, x[1:])):
            raise ValueError("x must be strictly decreasing and positive")
        cols = [seq]
        t = seq
        for j in range(1, len(seq)):
            nxt = []
            for i in range(len(seq) - j):
                num = x[i] * t[i + 1] - x[i + j] * t[i]
                nxt.append(num / (x[i] - x[i + j]))
            cols.append(nxt)
            t = nxt
        return cols
    raise ValueError(f"unknown method {method!r}")


def w_arithmetic_nodes(n_lo: int, n_hi: int, count: int) -> list:
    """~count integers n with W(n) equally spaced on [W(n_lo), W(n_hi)]."""
    w_lo = float(w_value(n_lo, 64).w)
    w_hi = float(w_value(n_hi, 64).w)
    ns = {n_hi}
    for j in range(count):
        wv = w_lo + (w_hi - w_lo) * j / max(count - 1, 1)
        n = round(wv * _fexp(wv))
        if n_lo <= n <= n_hi:
            ns.add(n)
    return sorted(ns)


# ---------------------------------------------------------------------------
# generalized scale elimination
# ---------------------------------------------------------------------------

def _chebyshev_row(t, imax: int):
    out = [mpf(1)]
    if imax >= 1:
        out.append(t)
    for _ in range(2, imax + 1):
        out.append(2 * t * out[-1] - out[-2])
    return out


def scale_eliminate(nodes: list, values: list, ws: list,
                    kmax: int, imax: int, complex_ok: bool = False):
    """Fit values ~ C + sum_{k=2..kmax} e^{-kw} P_k(1/(1+w)) and return C.

    P_k runs over Chebyshev polynomials of degree <= imax on the node range
    of 1/(1+w); columns are sup-normalized before the least-squares solve.
    """
    P = len(nodes)
    ss = [1 / (1 + w) for w in ws]
    s_lo, s_hi = min(ss), max(ss)
    span = s_hi - s_lo
    Q = 1 + (kmax - 1) * (imax + 1)
    if P < Q + 2:
        raise ValueError(f"{P} nodes for {Q} basis functions; need more data")
    A = matrix(P, Q)
    b = matrix(P, 1)
    for p in range(P):
        w, s = ws[p], ss[p]
        t = (2 * s - s_lo - s_hi) / span if span != 0 else mpf(0)
        cheb = _chebyshev_row(t, imax)
        A[p, 0] = mpf(1)
        q = 1
        for k in range(2, kmax + 1):
            ekw = mp.exp(-k * w)
            for i in range(imax + 1):
                A[p, q] = ekw * cheb[i]
                q += 1
        b[p] = values[p]
    scales = []
    for q in range(Q):
        m = max(abs(A[p, q]) for p in range(P))
        scales.append(m if m != 0 else mpf(1))
        for p in range(P):
            A[p, q] /= scales[q]
    if complex_ok:
        # normal equations (conjugate transpose); fine at these precisions
        AH = A.H
        x = lu_solve(AH * A, AH * b)
    else:
        x, _ = qr_solve(A, b)
    return x[0] / scales[0]


@dataclass(frozen=True)
class ExtrapolationResult:
    estimate: object
    stable_digits: int
    trace: tuple            # (method, setting, value-string) triples
    n_min: int
    n_max: int
    precision_bits: int

    def as_dict(self) -> dict:
        return {
            "estimate": format_bigfloat(self.estimate, self.precision_bits),
            "stable_digits": self.stable_digits,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "precision_bits": self.precision_bits,
            "trace": [{"method": m, "setting": s, "value": v}
                      for (m, s, v) in self.trace],
        }


def _stable_from_settings(finals: list, ladders: list, bits: int) -> int:
    """Honest digit count: best cross-setting agreement capped by the best
    depth-ladder self-agreement (both are 'two independent method/depth
    settings'; the min keeps either from overreporting alone)."""
    cross = 0
    for i in range(len(finals)):
        for j in range(i + 1, len(finals)):
            cross = max(cross, agree_digits(finals[i], finals[j], bits))
    self_best = max(agree_digits(full, shallow, bits)
                    for full, shallow in ladders)
    return min(cross, self_best)


def _run_settings(nodes_for, settings, bits, complex_ok=False):
    """Run scale elimination over a ladder of settings; returns
    (finals, ladders, trace_entries)."""
    finals, ladders, trace = [], [], []
    for (frac_lo, kmax, imax, count) in settings:
        nodes, values, ws = nodes_for(frac_lo, count)
        full = scale_eliminate(nodes, values, ws, kmax, imax, complex_ok)
        shallow = scale_eliminate(nodes, values, ws, max(2, kmax - 1),
                                  max(2, imax - 2), complex_ok)
        finals.append(full)
        ladders.append((full, shallow))
        trace.append(("scale-elimination",
                      f"window>={nodes[0]},kmax={kmax},imax={imax}",
                      format_bigfloat(full, bits)))
        trace.append(("scale-elimination",
                      f"window>={nodes[0]},kmax={max(2, kmax - 1)},"
                      f"imax={max(2, imax - 2)} (ladder)",
                      format_bigfloat(shallow, bits)))
    return finals, ladders, trace


def _classic_trace(nodes, values, ws, bits) -> list:
    trace = []
    ait = accelerate(values, "aitken")
    best = min(range(len(ait)), key=lambda i: abs(ait[i][-1] - ait[-1][-1])
               if len(ait[i]) else 0)
    trace.append(("aitken", f"stages={len(ait) - 1}",
                  format_bigfloat(ait[best][-1], bits)))
    wyn = accelerate(values, "wynn")
    trace.append(("wynn", f"columns={2 * (len(wyn) - 1)}",
                  format_bigfloat(wyn[-1][-1] if wyn[-1] else wyn[-2][-1], bits)))
    xs = [mp.exp(-2 * w) for w in ws]
    rich = accelerate(values, "richardson-in-x", x=xs)
    trace.append(("richardson-in-e^-2w", f"depth={len(rich) - 1}",
                  format_bigfloat(rich[-1][-1], bits)))
    return trace


def _check_starvation(stable: int, bits: int) -> None:
    if stable > 0.301 * bits - 40:
        raise PrecisionStarvationError(
            f"claimed {stable} stable digits at {bits} bits; "
            f"raise precision_bits")


def estimate_ct(t_table: SequenceTable, b_table: SequenceTable,
                n_max: int = 1000,
                precision_bits: int = 3072,
                n_min: int | None = None) -> ExtrapolationResult:
    """Extrapolate u_n = T_{n+1}/(B_n e^{w^2/2+w}) to its limit ct.

    Requires T to n_max+1 and B to n_max.  With n_max = 1000 and >= 3072
    bits the estimate carries ~13-14 stable digits.
    """
    check_precision(precision_bits)
    if t_table.n_max < n_max + 1 or b_table.n_max < n_max:
        raise ValueError("tables too short for n_max")
    if n_max < 60:
        raise ValueError("n_max >= 60 required")
    n_min = n_min if n_min is not None else max(40, n_max // 20)

    cache: dict = {}

    def u_at(n: int):
        if n not in cache:
            wv = w_value(n, precision_bits)
            with workprec(precision_bits + 16):
                cache[n] = (wv.w, mpf(t_table[n + 1]) /
                            (mpf(b_table[n]) * mp.exp(wv.w ** 2 / 2 + wv.w)))
        return cache[n]

    def nodes_for(frac_lo: float, count: int):
        lo = max(n_min, int(n_max * frac_lo))
        nodes = w_arithmetic_nodes(lo, n_max, count)
        pairs = [u_at(n) for n in nodes]
        return nodes, [p[1] for p in pairs], [p[0] for p in pairs]

    settings = [
        (0.30, 4, 5, 60),
        (0.20, 5, 6, 80),
        (0.50, 5, 8, 80),
    ]
    with workprec(precision_bits + 16):
        finals, ladders, trace = _run_settings(nodes_for, settings,
                                               precision_bits)
        stable = _stable_from_settings(finals, ladders, precision_bits)
        _check_starvation(stable, precision_bits)
        cnodes, cvals, cws = nodes_for(0.06, 31)
        trace.extend(_classic_trace(cnodes, cvals, cws, precision_bits))
        estimate = finals[0]
    return ExtrapolationResult(estimate, stable, tuple(trace),
                               n_min, n_max, precision_bits)


# ---------------------------------------------------------------------------
# d(lam) for the binomial family
# ---------------------------------------------------------------------------

def _log_table_values(table: SequenceTable, ns: list, bits: int) -> dict:
    """log a_n for the sampled n; complex tables get branch tracking."""
    out = {}
    if table.domain == "gaussian":
        # unwrap the argument over consecutive n, then refine at the nodes
        theta = 0.0
        winding: dict = {}
        prev_arg = None
        with workprec(64):
            for n in range(1, max(ns) + 1):
                v = table[n]
                re = to_mpf(Fraction(v.re), 64)
                im = to_mpf(Fraction(v.im), 64)
                arg = float(mp.atan2(im, re))
                if prev_arg is None:
                    theta = arg
                else:
                    d = arg - prev_arg
                    while d > 3.14159265358979:
                        d -= 2 * 3.141592653589793
                    while d < -3.14159265358979:
                        d += 2 * 3.141592653589793
                    if abs(d) > 2.8:
                        raise BranchTrackingError(
                            f"ambiguous branch step at n={n}: {d:+.3f} rad")
                    theta += d
                prev_arg = arg
                winding[n] = round((theta - arg) / (2 * 3.141592653589793))
        with workprec(bits + 16):
            two_pi = 2 * mp.pi
            for n in ns:
                v = table[n]
                re = to_mpf(Fraction(v.re), bits + 16)
                im = to_mpf(Fraction(v.im), bits + 16)
                mod = mp.log(re * re + im * im) / 2
                ang = mp.atan2(im, re) + winding[n] * two_pi
                out[n] = mp.mpc(mod, ang)
        return out
    with workprec(bits + 16):
        for n in ns:
            v = table[n]
            if isinstance(v, Fraction):
                out[n] = mp.log(mpf(v.numerator)) - mp.log(mpf(v.denominator))
            else:
                out[n] = mp.log(mpf(v))
    return out


def _lam_to_mp(lam, bits: int):
    if isinstance(lam, GaussianRational):
        with workprec(bits + 16):
            return mp.mpc(to_mpf(Fraction(lam.re), bits),
                          to_mpf(Fraction(lam.im), bits))
    return to_mpf(Fraction(lam), bits)


def family_display_residual(a_table: SequenceTable, b_table: SequenceTable,
                            lam, n: int, d_hat,
                            precision_bits: int = 640):
    """log A_n - log B_n - lam (w^2/2 + w + d_hat - (lam+1)/2 e^{-w})."""
    la = _log_table_values(a_table, [n], precision_bits)[n]
    lb = _log_table_values(b_table, [n], precision_bits)[n]
    lam_v = _lam_to_mp(lam, precision_bits)
    wv = w_value(n, precision_bits)
    with workprec(precision_bits + 16):
        w = wv.w
        model = lam_v * (w * w / 2 + w + d_hat
                         - (lam_v + 1) / 2 * mp.exp(-w))
        return +(la - lb - model)


def estimate_d_lambda(a_table: SequenceTable, b_table: SequenceTable, lam,
                      n_max: int = 600,
                      precision_bits: int = 1024,
                      n_min: int | None = None) -> ExtrapolationResult:
    """Extrapolate v_n = (log A_n - log B_n)/lam - w^2/2 - w
    + (lam+1)/2 e^{-w} toward d(lam); residual scale is e^{-2w}.

    lam must be nonzero (lam = 0 is the Bell case, A_n = B_n exactly).
    Complex lam uses principal logs with continuity-tracked branches.
    """
    check_precision(precision_bits)
    if not lam:
        raise ValueError("lam = 0 is degenerate (A_n = B_n); no d to extract")
    if a_table.n_max < n_max or b_table.n_max < n_max:
        raise ValueError("tables too short for n_max")
    n_min = n_min if n_min is not None else max(40, n_max // 20)
    is_complex = isinstance(lam, GaussianRational) and lam.im != 0
    lam_v = _lam_to_mp(lam, precision_bits)

    settings = [
        (0.30, 4, 5, 60),
        (0.20, 5, 6, 80),
        (0.45, 4, 7, 60),
    ]
    window_nodes = {}
    union = set()
    for (frac_lo, _, _, count) in settings + [(0.06, None, None, 31)]:
        lo = max(n_min, int(n_max * frac_lo))
        ns = w_arithmetic_nodes(lo, n_max, count)
        window_nodes[frac_lo] = ns
        union.update(ns)
    union = sorted(union)
    la = _log_table_values(a_table, union, precision_bits)
    lb = _log_table_values(b_table, union, precision_bits)

    vcache: dict = {}

    def v_at(n: int):
        if n not in vcache:
            wv = w_value(n, precision_bits)
            with workprec(precision_bits + 16):
                w = wv.w
                vcache[n] = (w, (la[n] - lb[n]) / lam_v - w * w / 2 - w
                             + (lam_v + 1) / 2 * mp.exp(-w))
        return vcache[n]

    def nodes_for(frac_lo: float, count: int):
        nodes = window_nodes[frac_lo]
        pairs = [v_at(n) for n in nodes]
        return nodes, [p[1] for p in pairs], [p[0] for p in pairs]
    with workprec(precision_bits + 16):
        finals, ladders, trace = _run_settings(nodes_for, settings,
                                               precision_bits,
                                               complex_ok=is_complex)
        stable = _stable_from_settings(finals, ladders, precision_bits)
        _check_starvation(stable, precision_bits)
        if not is_complex:
            cnodes, cvals, cws = nodes_for(0.06, 31)
            trace.extend(_classic_trace(cnodes, cvals, cws, precision_bits))
    return ExtrapolationResult(finals[0], stable, tuple(trace),
                               n_min, n_max, precision_bits)
