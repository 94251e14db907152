"""Where gamma_n mod 2 pi settles at the first zeros, compared with +/- the pitch angle."""
import argparse
import math

from radial_zeta.radial import pitch_angle
from radial_zeta.winding import gamma_pitch_distance, winding_at
from radial_zeta.zeros import builtin_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--first", type=int, default=5)
    ap.add_argument("--n", type=int, default=1_000_000)
    args = ap.parse_args()

    print(f"{'k':>3} {'gamma mod 2pi':>14} {'alpha':>9} {'d(+alpha)':>10} {'d(-alpha)':>10}")
    for r in builtin_zeros()[: args.first]:
        z = complex(0.5, -r.ordinate)
        s = winding_at(z, args.n)
        print(f"{r.index:>3} {s.gamma_n % (2 * math.pi):14.6f} {pitch_angle(z):9.6f} "
              f"{gamma_pitch_distance(s, 1):10.2e} {gamma_pitch_distance(s, -1):10.2e}")


if __name__ == "__main__":
    main()
