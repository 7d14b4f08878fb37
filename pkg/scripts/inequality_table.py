"""Tabulate the integer inequalities behind the nonvanishing bounds.

Each predicate is evaluated across and just outside its hypothesis so the
edge of validity is visible:

    python scripts/inequality_table.py --upto 16
"""

from __future__ import annotations

import argparse

from srtool.combinatorics import (
    factorial_below_power,
    sd_product_ratio,
    sd_product_ratio_bound,
    shifted_product_ratio,
    shifted_product_ratio_bound,
    top_shift_product_bound,
)
from srtool.errors import OutOfStatedRange


def _try(fn, *args):
    try:
        return fn(*args)
    except OutOfStatedRange:
        return "n/a"


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description="inequality predicates over a range")
    p.add_argument("--upto", type=int, default=14)
    p.add_argument("--k-max", type=int, default=6)
    args = p.parse_args(argv)

    print(f"{'d':>3} {'sd ratio':>12} {'bound':>6} {'top shift':>10} {'fact<pow':>9}")
    for d in range(1, args.upto + 1):
        r = sd_product_ratio(d)
        print(f"{d:>3} {float(r):>12.5g} {str(sd_product_ratio_bound(d)):>6} "
              f"{str(_try(top_shift_product_bound, d)):>10} {str(_try(factorial_below_power, d)):>9}")

    print()
    print("shifted product ratio >= 1, rows n, columns k = 2..", args.k_max, sep="")
    for n in range(1, args.upto + 1):
        cells = []
        for k in range(2, args.k_max + 1):
            ok = shifted_product_ratio_bound(n, k)
            cells.append(f"{float(shifted_product_ratio(n, k)):10.4g}{'' if ok else '*'}")
        print(f"{n:>3} " + " ".join(cells))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
