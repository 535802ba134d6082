"""Run seeded coded-multicast deliveries and compare measured fronthaul load with K(M-1)/(Mr)."""

import argparse
import random
from fractions import Fraction

from fogndt.core import NetworkConfig
from fogndt.multicast import run_delivery


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--r", type=float, default=1.0)
    args = parser.parse_args()

    mismatches = 0
    for seed in range(args.trials):
        rng = random.Random(seed)
        M, K = rng.randint(2, 6), rng.randint(1, 6)
        rep = run_delivery(NetworkConfig(M, K, K + 2, 1 / M, args.r), 24 * M, seed=seed)
        predicted = Fraction(K * (M - 1), M) / Fraction(args.r)
        measured = Fraction(rep.fronthaul_bits, 24 * M) / Fraction(args.r)
        if measured != predicted or not all(rep.per_en_reconstruction):
            mismatches += 1
            print(f"seed {seed}: M={M} K={K} measured {measured} predicted {predicted}")
    print(f"{args.trials} trials, {mismatches} mismatches")


if __name__ == "__main__":
    main()
