"""Scan octal rulesets for eventual periodicity of their heap values.

Whether every finite taking-no-breaking ruleset has eventually periodic
heap values is open; this scan reports a period when one fits the
computed prefix and says nothing stronger.  A reported period is only
"verified up to" the scanned bound.
"""

import argparse
import time

from scoreplay import Operator, find_period, gs_sequence, parse_ruleset

DEFAULT_RULESETS = [
    "123:1,2,3",
    "333:1,2,3",
    "3333:2,2,2,2",
    "3311:1,2,3,4",
    "30033:1,0,0,4,5",
    "sub{4,5}",
    "sub{1,3,5}",
    "sub{2,7}",
]


def main():
    parser = argparse.ArgumentParser(
        description="Report eventual periods of single-heap values.")
    parser.add_argument('--rulesets', nargs="+", default=DEFAULT_RULESETS,
                        help='Ruleset texts, space separated')
    parser.add_argument('--op', default="disjunctive",
                        choices=[o.name.lower() for o in Operator])
    parser.add_argument('--max', type=int, default=300,
                        help='Largest heap to compute')
    args = parser.parse_args()

    op = Operator[args.op.upper()]
    max_period = max(1, (args.max + 1) // 4)
    for text in args.rulesets:
        ruleset = parse_ruleset(text)
        start = time.perf_counter()
        vals = gs_sequence(ruleset, op, args.max)
        report = find_period(vals, max_period, max_period)
        elapsed = time.perf_counter() - start
        if report is None:
            print(f"{text}: no period with preperiod,period <= "
                  f"{max_period} up to n={args.max} [{elapsed:.1f} s]")
            continue
        block = ",".join(str(v) for v in report.block)
        print(f"{text}: preperiod={report.preperiod} "
              f"period={report.period} block=({block}) "
              f"verified to n={report.checked_up_to} [{elapsed:.1f} s]")


if __name__ == "__main__":
    main()
