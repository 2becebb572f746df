"""Regenerate every pinned heap-value table in one run.

Prints the single-heap sequences and the two-heap matrices that the test
suite freezes, with timing per table, so a change in engine behavior is
visible as a diff of this script's output.
"""

import argparse
import time

from scoreplay import Operator, gs_sequence, gs_table, parse_ruleset

SINGLES = [
    ("sub{4,5}", Operator.DISJUNCTIVE, 15),
    ("123:1,2,3", Operator.DISJUNCTIVE, 12),
    ("3111:1,2,3,4", Operator.DISJUNCTIVE, 8),
    ("3311:1,2,3,4", Operator.SELECTIVE, 12),
    ("333:1,2,3", Operator.SELECTIVE, 12),
    ("30033:1,0,0,4,5", Operator.SEQUENTIAL, 12),
]

TABLES = [
    ("123:1,2,3", "123:1,2,3", Operator.DISJUNCTIVE),
    ("123:1,2,3", "3111:1,2,3,4", Operator.DISJUNCTIVE),
    ("3311:1,2,3,4", "333:1,2,3", Operator.SELECTIVE),
    ("123:1,2,3", "30033:1,0,0,4,5", Operator.SEQUENTIAL),
]


def fmt(value):
    return str(value)


def main():
    parser = argparse.ArgumentParser(
        description="Recompute the frozen heap-value tables.")
    parser.add_argument('--size', type=int, default=12,
                        help='Largest heap on each matrix axis')
    args = parser.parse_args()

    for text, op, n_max in SINGLES:
        start = time.perf_counter()
        vals = gs_sequence(parse_ruleset(text), op, n_max)
        ms = (time.perf_counter() - start) * 1000.0
        print(f"{text} {op.name} single heaps 0..{n_max} [{ms:.0f} ms]")
        print("  " + " ".join(fmt(v) for v in vals))
        print()

    for col_text, row_text, op in TABLES:
        start = time.perf_counter()
        table = gs_table(parse_ruleset(col_text), parse_ruleset(row_text),
                         op, args.size, args.size)
        ms = (time.perf_counter() - start) * 1000.0
        print(f"{col_text} (columns) vs {row_text} (rows), "
              f"{op.name} [{ms:.0f} ms]")
        width = max(len(fmt(v)) for row in table for v in row)
        for row in table:
            print("  " + " ".join(fmt(v).rjust(width) for v in row))
        print()


if __name__ == "__main__":
    main()
