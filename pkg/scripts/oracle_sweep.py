#!/usr/bin/env python3
"""Cross-check the tensor rule against the character oracle over a big sweep.

Runs every pair 1 <= s <= r <= rmax, all line exponents in the chosen
window, in each requested torsion context, and reports agreement counts and
timing.  Disagreements (there should be none) are printed with both
decompositions.
"""

import argparse
import time

from atiyah import TorsionContext, oracle_check


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rmax", type=int, default=12)
    parser.add_argument("--exponent-window", type=int, default=3, metavar="W",
                        help="line exponents range over [-W, W]")
    parser.add_argument("--torsion", type=int, nargs="*", default=[0, 1, 2, 3, 4, 6])
    args = parser.parse_args()

    window = range(-args.exponent_window, args.exponent_window + 1)
    start = time.perf_counter()
    checks = 0
    failures = 0
    for n in args.torsion:
        ctx = TorsionContext(n)
        for r in range(1, args.rmax + 1):
            for s in range(1, r + 1):
                for ea in window:
                    for eb in window:
                        result = oracle_check(ctx, ctx.bundle(ea, r), ctx.bundle(eb, s))
                        checks += 1
                        if not result.agrees:
                            failures += 1
                            print(
                                f"MISMATCH n={n} r={r} s={s} e=({ea},{eb}): "
                                f"formula {result.from_formula} vs "
                                f"oracle {result.from_character}"
                            )
    elapsed = time.perf_counter() - start
    print(f"{checks} checks, {failures} disagreements, {elapsed:.2f}s")
    raise SystemExit(0 if failures == 0 else 2)


if __name__ == "__main__":
    main()
