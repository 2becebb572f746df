"""Text notation and command-line front end.

The notation mirrors the braces form used throughout the library's
docstrings: a game is either a bare rational or `{options|score|options}`,
where each options slot is `.` (no options) or a comma-separated list of
games.  Rationals accept `-`, `/` fractions, and decimal points (decimals
are exact: 1.5 parses as 3/2).

The `scoreplay` entry point exposes evaluation, the four sums, reduction,
distinguishing experiments, and the octal/board converters; see run().
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from .core import (Game, final_score_left, final_score_right, format_score,
                   make_game, negate, outcome)
from .core import notation as print_game
from .equivalence import (SearchBudget, budget_is_heuristic, bypass_reversible,
                          dedup, default_budget, distinguish, parse_budget,
                          remove_dominated)
from .grundy import (HeapPosition, OctalRuleset, find_period, gs, gs_sequence,
                     gs_table, parse_ruleset)
from .operators import EndRule, Operator, combine
from .positions import hackenbush_game, load_hack_file, toads_frogs_game

__all__ = ["main", "parse_game", "print_game", "run", "split_rulesets"]


class _Parser:
    """Recursive-descent reader for the braces notation."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ValueError(f"parse error at position {self.pos}: {msg} "
                         f"(in {self.text!r})")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def rational(self):
        self.skip_ws()
        start = self.pos
        while (self.pos < len(self.text)
               and (self.text[self.pos].isdigit()
                    or self.text[self.pos] in "-/.")):
            self.pos += 1
        token = self.text[start:self.pos]
        if not token:
            self.error("expected a rational")
        try:
            from fractions import Fraction
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            self.pos = start
            self.error(f"bad rational {token!r}")

    def options(self) -> list:
        if self.peek() == ".":
            self.pos += 1
            return []
        out = [self.game()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.game())
        return out

    def game(self) -> Game:
        c = self.peek()
        if c == "{":
            self.pos += 1
            left = self.options()
            self.expect("|")
            score = self.rational()
            self.expect("|")
            right = self.options()
            self.expect("}")
            return make_game(left, score, right)
        return make_game([], self.rational(), [])


def parse_game(text: str) -> Game:
    """Parse braces notation into an interned Game."""
    p = _Parser(text)
    g = p.game()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input")
    return g


_OPS = {"disj": Operator.DISJUNCTIVE, "conj": Operator.CONJUNCTIVE,
        "sel": Operator.SELECTIVE, "seq": Operator.SEQUENTIAL}
_RULES = {"long": EndRule.LONG, "short": EndRule.SHORT}


def split_rulesets(text: str) -> List[str]:
    """Split a comma-joined ruleset list, regrouping the commas that belong
    inside a single ruleset's point list (e.g. "123:1,2,3,123:1,2,3" is two
    rulesets, "sub{4,5}" is one)."""
    groups: List[List[str]] = []
    for token in text.split(","):
        tok = token.strip()
        head = tok.split(":", 1)[0]
        starts = (tok.startswith("sub{")
                  or (":" in tok and head.isdigit()
                      and all(ch in "01234567" for ch in head)))
        if starts or not groups:
            groups.append([tok])
        else:
            groups[-1].append(tok)
    return [",".join(g) for g in groups]


def _budget_from(args) -> SearchBudget:
    if getattr(args, "budget", None):
        return parse_budget(args.budget)
    return default_budget()


def _parse_heaps(text: str) -> List[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _position(args) -> HeapPosition:
    rulesets = [parse_ruleset(r) for r in split_rulesets(args.rulesets)]
    heaps = _parse_heaps(args.heaps)
    if len(rulesets) == 1:
        rulesets = rulesets * len(heaps)
    if len(rulesets) != len(heaps):
        raise ValueError("need one ruleset, or exactly one per heap")
    return HeapPosition(zip(heaps, rulesets))


def _emit_table(table, fmt: str) -> str:
    rows = [[format_score(v) for v in row] for row in table]
    if fmt == "md":
        ncols = len(rows[0])
        out = ["| m\\n | " + " | ".join(str(n) for n in range(ncols)) + " |",
               "|" + "---|" * (ncols + 1)]
        for m, row in enumerate(rows):
            out.append(f"| {m} | " + " | ".join(row) + " |")
        return "\n".join(out)
    return "\n".join("\t".join(row) for row in rows)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one CLI command; returns the process exit code."""
    top = argparse.ArgumentParser(
        prog="scoreplay",
        description="Exact computations on scoring-play combinatorial games.")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("eval", help="final scores and outcome of a game")
    p.add_argument("expr")

    p = sub.add_parser("sum", help="combine two games under an operator")
    p.add_argument("--op", choices=sorted(_OPS), default="disj")
    p.add_argument("--rule", choices=sorted(_RULES), default="long")
    p.add_argument("exprs", nargs=2)

    p = sub.add_parser("negate", help="negate a game")
    p.add_argument("expr")

    p = sub.add_parser("reduce", help="dedup, remove dominated options, "
                                      "bypass reversible options")
    p.add_argument("--budget")
    p.add_argument("expr")

    p = sub.add_parser("distinguish", help="search for a game separating two games")
    p.add_argument("--op", choices=sorted(_OPS), default="disj")
    p.add_argument("--budget")
    p.add_argument("exprs", nargs=2)

    p = sub.add_parser("gs", help="scoring Sprague-Grundy value of heaps")
    p.add_argument("--rulesets", required=True)
    p.add_argument("--op", choices=sorted(_OPS), required=True)
    p.add_argument("--heaps", required=True)

    p = sub.add_parser("gs-table", help="two-heap value matrix")
    p.add_argument("--rulesets", required=True)
    p.add_argument("--op", choices=sorted(_OPS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["tsv", "md"], default="tsv")

    p = sub.add_parser("period", help="eventual period of single-heap values")
    p.add_argument("--ruleset", required=True)
    p.add_argument("--op", choices=sorted(_OPS), required=True)
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("tf", help="game of a Toads & Frogs board")
    p.add_argument("board")

    p = sub.add_parser("hack", help="game of a Hackenbush graph file")
    p.add_argument("file")
    p.add_argument("--variant", type=int, choices=[1, 2, 3], default=1)
    p.add_argument("--split-op", choices=sorted(_OPS), default="disj")

    args = top.parse_args(argv)
    try:
        out = _dispatch(args)
    except (ValueError, TypeError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def _dispatch(args) -> str:
    if args.cmd == "eval":
        g = parse_game(args.expr)
        sl = format_score(final_score_left(g))
        sr = format_score(final_score_right(g))
        return f"SL={sl} SR={sr} outcome={outcome(g).value}"

    if args.cmd == "sum":
        g, h = (parse_game(e) for e in args.exprs)
        return print_game(combine(_OPS[args.op], g, h, _RULES[args.rule]))

    if args.cmd == "negate":
        return print_game(negate(parse_game(args.expr)))

    if args.cmd == "reduce":
        budget = _budget_from(args)
        g = bypass_reversible(
            remove_dominated(dedup(parse_game(args.expr)), budget), budget)
        text = print_game(g)
        if budget_is_heuristic(budget):
            text += " HEURISTIC"
        return text

    if args.cmd == "distinguish":
        g, h = (parse_game(e) for e in args.exprs)
        w = distinguish(g, h, op=_OPS[args.op], budget=_budget_from(args))
        if w is None:
            return "NONE"
        return f"X={print_game(w.x)} class={w.class_violated} {w.detail}"

    if args.cmd == "gs":
        return format_score(gs(_position(args), _OPS[args.op]))

    if args.cmd == "gs-table":
        rulesets = [parse_ruleset(r) for r in split_rulesets(args.rulesets)]
        if len(rulesets) != 2:
            raise ValueError("gs-table needs exactly two rulesets")
        table = gs_table(rulesets[0], rulesets[1], _OPS[args.op],
                         args.n, args.m)
        return _emit_table(table, args.format)

    if args.cmd == "period":
        ruleset = parse_ruleset(args.ruleset)
        values = gs_sequence(ruleset, _OPS[args.op], args.max)
        cap = (args.max + 1) // 4
        report = find_period(values, cap, cap)
        if report is None:
            return "NONE"
        block = ",".join(format_score(v) for v in report.block)
        return (f"preperiod={report.preperiod} period={report.period} "
                f"block={block}")

    if args.cmd == "tf":
        return print_game(toads_frogs_game(args.board))

    if args.cmd == "hack":
        graph = load_hack_file(args.file, variant=args.variant,
                               split_op=_OPS[args.split_op])
        return print_game(hackenbush_game(graph))

    raise ValueError(f"unknown command {args.cmd!r}")


def main() -> None:
    sys.exit(run())
