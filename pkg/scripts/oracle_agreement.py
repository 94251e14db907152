"""Radial center vs the eta oracle on a seeded random sample of the half plane."""
import argparse
import random

from radial_zeta.radial import center_best_effort
from radial_zeta.oracle import zeta_eta


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--tol", type=float, default=1e-4)
    ap.add_argument("--n-max", type=int, default=10_000_000)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'x':>7} {'y':>8} {'|diff|':>10} {'bound':>10} {'N':>9}")
    for _ in range(args.points):
        z = complex(rng.uniform(0.3, 2.5), rng.choice([-1, 1]) * rng.uniform(2, 50))
        res = center_best_effort(z, args.tol, args.n_max)
        diff = abs(res.center - zeta_eta(z).value)
        print(f"{z.real:7.3f} {z.imag:8.3f} {diff:10.3e} {res.tail_bound:10.3e} {res.n_used:9d}")


if __name__ == "__main__":
    main()
