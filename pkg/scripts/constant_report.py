#!/usr/bin/env python3
"""Constant report: the lambda_l table, its partial sums, and the
extrapolated growth-ratio constant ct, side by side.

The conjecture identifying ct with sum_l lambda_l is REPORTED here, never
asserted: the series may well diverge (the partial sums do wander), and
this script only prints both quantities next to each other.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fractions import Fraction                                  # noqa: E402

from takasym import bell_numbers, takeuchi_numbers              # noqa: E402
from takasym.ansatz import (TakeuchiAnsatzSpec, h_partial_sums,  # noqa: E402
                            lambda_table)
from takasym.asymptotics import CT_REFERENCE                    # noqa: E402
from takasym.bigfloat import format_bigfloat                    # noqa: E402
from takasym.extrapolation import estimate_ct                   # noqa: E402
from takasym.numerics import format_rational                    # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--l-max", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=1000)
    ap.add_argument("--precision-bits", type=int, default=3072)
    args = ap.parse_args()

    print(f"lambda_l table (l <= {args.l_max}):")
    lt = lambda_table(TakeuchiAnsatzSpec(), args.l_max)
    sums = h_partial_sums(lt.values)
    for l, (v, s) in enumerate(zip(lt.values, sums)):
        print(f"  l={l}: lambda_l = {format_rational(v):>24}   "
              f"mu_l = {format_rational(lt.mu(l)):>16}   "
              f"partial sum = {format_rational(s)} = {float(s):+.6f}")

    print(f"\nextrapolating ct from exact tables to n = {args.n_max} ...")
    t = takeuchi_numbers(args.n_max + 1)
    b = bell_numbers(args.n_max)
    res = estimate_ct(t, b, args.n_max, args.precision_bits)
    print(f"  ct estimate   = {format_bigfloat(res.estimate, 64)}")
    print(f"  stable digits = {res.stable_digits} (cross-setting agreement)")
    print(f"  reference     = {CT_REFERENCE} (25-digit)")

    print("\nside by side (NO convergence assertion is made):")
    print(f"  sum of lambda_l through l={args.l_max}: {float(sums[-1]):+.6f}")
    print(f"  extrapolated ct:                 {format_bigfloat(res.estimate, 64)}")

    print("\nmethod trace:")
    for m, s, v in res.trace:
        print(f"  {m:<22} {s:<44} {v[:40]}...")
    return 0


if __name__ == "__main__":
    sys.exit(main())
