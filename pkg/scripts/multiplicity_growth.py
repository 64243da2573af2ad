#!/usr/bin/env python3
"""Tabulate the decomposition of F_r^{⊗m} and watch multiplicities grow.

The component multiplicities grow roughly like r^m (for r = 2 the bottom
coefficient is a Catalan-like central binomial), which is why the package
keeps them as arbitrary-precision integers.
"""

import argparse

from atiyah import BundleSum, TorsionContext


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=2)
    parser.add_argument("--mmax", type=int, default=24)
    parser.add_argument(
        "--full", action="store_true",
        help="print the whole decomposition instead of summary columns",
    )
    args = parser.parse_args()

    ctx = TorsionContext(0)
    base = BundleSum.single(ctx, ctx.atiyah(args.rank))
    power = BundleSum.unit(ctx)
    if not args.full:
        print(f"{'m':>3} {'rank':>28} {'components':>10}  largest multiplicity")
    for m in range(1, args.mmax + 1):
        power = power.tensor(base)
        if args.full:
            print(f"F_{args.rank}^({m}) = {power}")
            continue
        largest = max(power.terms.values())
        print(f"{m:>3} {power.rank():>28} {len(power.terms):>10}  {largest}")


if __name__ == "__main__":
    main()
