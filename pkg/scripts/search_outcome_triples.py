"""Which (outcome G, outcome H, outcome of G op H) triples actually occur?

Samples pairs from the deterministic enumeration and tabulates the
observed triples per operator.  For the disjunctive sum all 125 triples
are realizable; for the sequential join 30 are impossible whenever both
components sit in an outcome class that forces their final scores'
signs.  This script only reports what the sample shows, it asserts
nothing.
"""

import argparse
import collections
import itertools
import time

from scoreplay import (Operator, SearchBudget, combine, default_budget,
                       enumerate_test_games, outcome, parse_budget)

LABELS = ("L", "R", "N", "P", "TIE")


def main():
    parser = argparse.ArgumentParser(
        description="Tabulate outcome triples over sampled sums.")
    parser.add_argument('--op', default="disjunctive",
                        choices=[o.name.lower() for o in Operator])
    parser.add_argument('--pairs', type=int, default=40000,
                        help='Number of sampled (G, H) pairs')
    parser.add_argument('--budget', default=None,
                        help='Enumeration budget, e.g. depth=2,cand=5000')
    args = parser.parse_args()

    op = Operator[args.op.upper()]
    budget = (parse_budget(args.budget, default_budget())
              if args.budget else default_budget())
    pool = enumerate_test_games(budget)

    # Stride through the pool so the sample is not all atoms.
    stride = max(1, (len(pool) * len(pool)) // args.pairs)
    seen = collections.Counter()
    start = time.perf_counter()
    count = 0
    for idx in range(0, len(pool) * len(pool), stride):
        g, h = pool[idx // len(pool)], pool[idx % len(pool)]
        seen[(outcome(g).name, outcome(h).name,
              outcome(combine(op, g, h)).name)] += 1
        count += 1
    elapsed = time.perf_counter() - start

    print(f"{op.name}: {count} pairs, "
          f"{len(seen)}/125 triples observed [{elapsed:.1f} s]")
    missing = [t for t in itertools.product(LABELS, repeat=3) if t not in seen]
    for x in LABELS:
        for y in LABELS:
            row = ",".join(z for z in LABELS if (x, y, z) in seen)
            print(f"  {x:>3} {y:>3} -> {row if row else '(none seen)'}")
    print(f"missing: {len(missing)}")
    for t in missing:
        print("  " + " ".join(t))


if __name__ == "__main__":
    main()
