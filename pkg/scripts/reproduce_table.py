"""Recompute U at every built-in zero and compare against the stored integers.

    python scripts/reproduce_table.py --n-max 1e6 --first 30
"""
import argparse
import sys
import time

from radial_zeta.cli import _int, table_rows
from radial_zeta.zeros import builtin_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=_int, default=1_000_000)
    ap.add_argument("--first", type=int, default=30)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = table_rows(builtin_zeros()[: args.first], 0.5, args.n_max, 0.1)
    print(f"{'k':>3} {'t':>20} {'U':>12} {'expected':>8} {'resid':>9}  match")
    for idx, t, u, k, expected, match, resid, _ in rows:
        print(f"{idx:>3} {t:>20.15f} {u:>12.6f} {expected:>8} {resid:>9.2e}  {match}")
    matched = sum(bool(r[5]) for r in rows)
    print(f"matched {matched}/{len(rows)} in {time.perf_counter() - t0:.1f}s")
    return 0 if matched == len(rows) else 3


if __name__ == "__main__":
    sys.exit(main())
