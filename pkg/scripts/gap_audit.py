"""Audit achievable / lower bound over the standard grid and list the worst points."""

import argparse

from fogndt.bounds import optimality_gap
from fogndt.sweep import standard_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--top", type=int, default=10)
    args = parser.parse_args()

    ratios = sorted(
        ((optimality_gap(c), c) for c in standard_grid().points()),
        key=lambda t: (-t[0], t[1].M, t[1].K, t[1].mu, t[1].r),
    )
    print(f"{len(ratios)} points, max ratio {ratios[0][0]:.6f}, above 3: {sum(g > 3 + 1e-9 for g, _ in ratios)}")
    print("ratio      M  K  mu    r")
    for g, c in ratios[: args.top]:
        print(f"{g:.6f}  {c.M}  {c.K}  {c.mu:.2f}  {c.r:.1f}")


if __name__ == "__main__":
    main()
