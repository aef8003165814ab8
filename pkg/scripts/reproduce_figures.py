#!/usr/bin/env python3
"""Regenerate the two ratio plots' data as CSV (n <= 1000 by default).

  figure1.csv : n, 1/n, T_{n+1}/T_n - B_n/B_{n-1}   (tends to 1)
  figure2.csv : n, 1/n, T_{n+1}/(B_n e^{w^2/2+w})   (tends to ct)

Writes into --out-dir (default ./figures-data).  Any plotting tool can
consume the CSV; this repository does not render images.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from takasym import bell_numbers, takeuchi_numbers          # noqa: E402
from takasym.asymptotics import figure2_ratio, growth_gap   # noqa: E402
from takasym.bigfloat import format_bigfloat                # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=1000)
    ap.add_argument("--step", type=int, default=1)
    ap.add_argument("--precision-bits", type=int, default=256)
    ap.add_argument("--out-dir", default="figures-data")
    args = ap.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    print(f"building exact tables to n = {args.n_max + 1} ...")
    t = takeuchi_numbers(args.n_max + 1)
    b = bell_numbers(args.n_max)

    bits = args.precision_bits
    rows1, rows2 = ["n,1/n,value"], ["n,1/n,value"]
    for n in range(1, args.n_max + 1, args.step):
        inv = f"{1.0 / n:.12g}"
        rows1.append(f"{n},{inv},"
                     f"{format_bigfloat(growth_gap(t, b, n, bits), bits)}")
        rows2.append(f"{n},{inv},"
                     f"{format_bigfloat(figure2_ratio(t, b, n, bits), bits)}")
    for name, rows in (("figure1.csv", rows1), ("figure2.csv", rows2)):
        path = os.path.join(args.out_dir, name)
        with open(path, "w") as fh:
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {path} ({len(rows) - 1} rows)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
