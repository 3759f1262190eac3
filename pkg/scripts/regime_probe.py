#!/usr/bin/env python3
"""Probe the boundary of the circle regime: is 3k - l really the edge?

Inside 2k <= n <= 3k - l the quantity k|V|/n is a proven ceiling for
antipodal-free families and example2 attains it.  This script solves
instances just past that edge and reports whether the (no longer
justified) circle value still happens to bound, or even match, the true
optimum.  Output is evidence, not a theorem check: nothing here asserts.
"""

import argparse
import sys
from fractions import Fraction

from antipodal import (
    Params,
    TooLarge,
    cardinality_v,
    example1,
    example2,
    max_antipodal_free,
    theorem1_bound,
)


def probe(kmax: int, overshoot: int, budget: float, vertex_cap: int) -> int:
    print(f"{'n':>3} {'k':>3} {'l':>3} {'edge':>5} {'alpha':>7} {'k|V|/n':>9} "
          f"{'ex1':>6} {'ex2':>6} {'thm1':>6}  verdict")
    for k in range(2, kmax + 1):
        for l in range(1, k + 1):
            edge = 3 * k - l
            for n in range(edge + 1, edge + overshoot + 1):
                if n < 2 * k or k + l > n:
                    continue
                p = Params(n, k, l)
                if cardinality_v(p) > vertex_cap:
                    continue
                try:
                    result = max_antipodal_free(p, budget=budget)
                except TooLarge:
                    continue
                if not result.proof_of_optimality:
                    continue
                alpha = result.optimum
                circle_value = Fraction(k * cardinality_v(p), n)
                if alpha > circle_value:
                    verdict = "circle value fails past the edge"
                elif alpha == circle_value:
                    verdict = "circle value still exact"
                else:
                    verdict = "circle value holds (unproven here)"
                print(
                    f"{n:>3} {k:>3} {l:>3} {edge:>5} {alpha:>7} "
                    f"{str(circle_value):>9} {len(example1(p)):>6} "
                    f"{len(example2(p)):>6} {theorem1_bound(p):>6}  {verdict}"
                )
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--overshoot", type=int, default=2, help="how far past 3k-l to probe")
    ap.add_argument("--budget", type=float, default=30.0)
    ap.add_argument("--vertex-cap", type=int, default=600)
    args = ap.parse_args()
    return probe(args.kmax, args.overshoot, args.budget, args.vertex_cap)


if __name__ == "__main__":
    sys.exit(main())
