#!/usr/bin/env python3
"""Print the dim R(E) vs dim G correspondence over a (rank, torsion) grid.

Each cell classifies E = L ⊗ F_rank for a twisting line bundle L of the
given torsion order (0 = non-torsion) and compares the Krull dimension of
the representation ring with the dimension of the minimal trivializing
group scheme.
"""

import argparse

from atiyah import classify, correspondence_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rmax", type=int, default=10)
    parser.add_argument("--nmax", type=int, default=12)
    parser.add_argument(
        "--details", action="store_true", help="also print each cell's presentation"
    )
    args = parser.parse_args()

    cells = correspondence_grid(args.rmax, args.nmax)
    print(f"{'rank':>4} {'torsion':>7} {'dim R':>5} {'dim G':>5}  presentation / group")
    for cell in cells:
        report = classify(cell.rank, cell.torsion)
        extra = ""
        if args.details:
            extra = f"  {report.presentation} / {report.group}"
            if report.minimality_note:
                extra += "  [minimal beyond ring modulus]"
        mark = "" if cell.holds else "  <-- MISMATCH"
        print(
            f"{cell.rank:>4} {cell.torsion:>7} {cell.krull_dim:>5} {cell.group_dim:>5}"
            f"{extra}{mark}"
        )
    holding = sum(1 for c in cells if c.holds)
    print(f"\ncorrespondence holds in {holding}/{len(cells)} cells")


if __name__ == "__main__":
    main()
