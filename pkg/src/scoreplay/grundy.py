"""The scoring Sprague-Grundy function over octal heap games.

An octal ruleset (t_1..t_f, p_1..p_f) lets a player take k beans from a
heap for p_k points; the bits of digit t_k say what may remain: bit 0
allows emptying the heap exactly (n = k), bit 1 allows leaving one nonempty
heap (n > k), bit 2 allows splitting the rest into two nonempty heaps
(n - k >= 2).  Subtraction games are the digit-0/3 special case.

G_s(position) is the best final score for the player to move, where both
players draw from the same move set and a move's points go to whoever makes
it.  A turn depends on the operator: disjunctive play moves in exactly one
heap, conjunctive in every heap that has a move, selective in any nonempty
subset of heaps with moves, sequential in the first heap (list order) that
has a move.  With no move anywhere the position is dead and scores 0, so
G_s(n) = max over turns of (points taken - G_s(rest)).

gs computes this by direct memoized recursion; gs_oracle instead builds the
explicit game tree of the position and evaluates final_score_left, giving
an independent cross-check of the recursion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .core import Game, as_score, atom, final_score_left, make_game, shift
from .operators import Operator, n_ary

__all__ = [
    "HeapPosition",
    "OctalRuleset",
    "PeriodReport",
    "find_period",
    "gs",
    "gs_oracle",
    "gs_sequence",
    "gs_table",
    "moves",
    "parse_ruleset",
    "subtraction_ruleset",
]

ORACLE_BEAN_CAP = 16


@dataclass(frozen=True)
class OctalRuleset:
    """Digits t_1..t_f with per-take point values p_1..p_f."""

    digits: Tuple[int, ...]
    points: Tuple[Fraction, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        points = tuple(as_score(p) for p in self.points)
        if not digits:
            raise ValueError("ruleset needs at least one digit")
        if any(d < 0 or d > 7 for d in digits):
            raise ValueError("octal digits must be in 0..7")
        if len(points) != len(digits):
            raise ValueError("need exactly one point value per digit")
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "points", points)

    def taking_no_breaking(self) -> bool:
        """True when no digit allows splitting a heap (all digits <= 3)."""
        return all(d <= 3 for d in self.digits)

    def __repr__(self) -> str:
        pts = ",".join(str(p) for p in self.points)
        return f"OctalRuleset({''.join(str(d) for d in self.digits)}:{pts})"


def subtraction_ruleset(takes: Iterable[int],
                        points: Optional[dict] = None) -> OctalRuleset:
    """The subtraction game with set S: digit 3 at each s in S, p_s = s."""
    takes = sorted(set(int(k) for k in takes))
    if not takes or takes[0] < 1:
        raise ValueError("subtraction set must contain positive integers")
    f = takes[-1]
    digits = tuple(3 if k in set(takes) else 0 for k in range(1, f + 1))
    pts = tuple(as_score(points[k]) if points and k in points else Fraction(k)
                for k in range(1, f + 1))
    return OctalRuleset(digits, pts)


def parse_ruleset(text: str) -> OctalRuleset:
    """Parse "<digits>:<p1>,<p2>,..." or the shorthand "sub{4,5}"."""
    text = text.strip()
    if text.startswith("sub{") and text.endswith("}"):
        inner = text[4:-1]
        return subtraction_ruleset(int(tok) for tok in inner.split(",") if tok.strip())
    digits_part, sep, points_part = text.partition(":")
    if not sep:
        raise ValueError(f"ruleset {text!r} needs '<digits>:<points>' or 'sub{{...}}'")
    try:
        digits = tuple(int(ch) for ch in digits_part.strip())
    except ValueError:
        raise ValueError(f"bad octal digits in {text!r}") from None
    points = tuple(as_score(tok.strip()) for tok in points_part.split(","))
    return OctalRuleset(digits, points)


def moves(ruleset: OctalRuleset, n: int):
    """Legal single-heap moves: (k taken, remainder heap sizes, points).

    Ordered by k, then by what remains: empty the heap (digit bit 0, only
    when n = k), leave one heap (bit 1, when n > k), split in two (bit 2,
    when n - k >= 2, unordered pairs ascending).
    """
    if n < 1:
        raise ValueError("heap size must be positive")
    out = []
    for k in range(1, min(n, len(ruleset.digits)) + 1):
        digit = ruleset.digits[k - 1]
        p = ruleset.points[k - 1]
        if digit & 1 and n == k:
            out.append((k, (), p))
        if digit & 2 and n > k:
            out.append((k, (n - k,), p))
        if digit & 4 and n - k >= 2:
            for a in range(1, (n - k) // 2 + 1):
                out.append((k, (a, n - k - a), p))
    return out


class HeapPosition:
    """Heaps of beans, each tagged with its ruleset.

    Built from (size, ruleset) pairs; empty heaps are dropped, negative
    sizes rejected.  The given order is preserved because it matters under
    SEQUENTIAL play; the other operators treat the heaps as a multiset.
    """

    __slots__ = ("heaps",)

    def __init__(self, heaps: Iterable[Tuple[int, OctalRuleset]]):
        cleaned = []
        for sizeval, ruleset in heaps:
            sizeval = int(sizeval)
            if sizeval < 0:
                raise ValueError("heap sizes must be nonnegative")
            if not isinstance(ruleset, OctalRuleset):
                raise TypeError("each heap needs an OctalRuleset")
            if sizeval > 0:
                cleaned.append((sizeval, ruleset))
        self.heaps = tuple(cleaned)

    def total_beans(self) -> int:
        return sum(n for n, _ in self.heaps)

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}@{r!r}" for n, r in self.heaps)
        return f"HeapPosition([{inner}])"


def _ruleset_key(r: OctalRuleset):
    return (r.digits, r.points)


def _canonical_heaps(heaps: Tuple[Tuple[int, OctalRuleset], ...],
                     op: Operator) -> Tuple[Tuple[int, OctalRuleset], ...]:
    """Memo key: drop heaps with no moves (dead forever), sort unless order
    matters (SEQUENTIAL)."""
    live = tuple(h for h in heaps if moves(h[1], h[0]))
    if op is Operator.SEQUENTIAL:
        return live
    return tuple(sorted(live, key=lambda h: (_ruleset_key(h[1]), h[0])))


_GS_MEMO: dict = {}


def gs(position: HeapPosition, op: Operator) -> Fraction:
    """The scoring Sprague-Grundy value of a position under an operator.

    SEQUENTIAL play is only defined for taking-no-breaking rulesets (a split
    would create an ambiguous heap order), so breaking digits are rejected
    there.
    """
    if op is Operator.SEQUENTIAL:
        for _, ruleset in position.heaps:
            if not ruleset.taking_no_breaking():
                raise ValueError("sequential play needs all digits <= 3")
    return _gs(_canonical_heaps(position.heaps, op), op)


def _gs(heaps: Tuple[Tuple[int, OctalRuleset], ...], op: Operator) -> Fraction:
    # heaps are canonical: every heap has at least one move
    if not heaps:
        return Fraction(0)
    key = (op, tuple((n, _ruleset_key(r)) for n, r in heaps))
    cached = _GS_MEMO.get(key)
    if cached is not None:
        return cached

    def child(rest: list) -> Tuple[Tuple[int, OctalRuleset], ...]:
        return _canonical_heaps(tuple(rest), op)

    best = None
    if op is Operator.DISJUNCTIVE:
        for i, (n, ruleset) in enumerate(heaps):
            others = list(heaps[:i] + heaps[i + 1:])
            for k, rest, p in moves(ruleset, n):
                rem = others + [(r, ruleset) for r in rest]
                value = p - _gs(child(rem), op)
                if best is None or value > best:
                    best = value
    elif op is Operator.SEQUENTIAL:
        n, ruleset = heaps[0]
        tail = list(heaps[1:])
        for k, rest, p in moves(ruleset, n):
            rem = [(r, ruleset) for r in rest] + tail
            value = p - _gs(child(rem), op)
            if best is None or value > best:
                best = value
    else:
        indices = range(len(heaps))
        if op is Operator.CONJUNCTIVE:
            subsets = [tuple(indices)]
        elif op is Operator.SELECTIVE:
            subsets = [s for w in range(1, len(heaps) + 1)
                       for s in itertools.combinations(indices, w)]
        else:
            raise ValueError(f"unknown operator {op!r}")
        for subset in subsets:
            move_lists = [
                [(p, [(r, heaps[i][1]) for r in rest])
                 for _, rest, p in moves(heaps[i][1], heaps[i][0])]
                for i in subset
            ]
            keep = [heaps[i] for i in indices if i not in subset]
            for choice in itertools.product(*move_lists):
                points = sum(p for p, _ in choice)
                rem = keep + [h for _, hs in choice for h in hs]
                value = points - _gs(child(rem), op)
                if best is None or value > best:
                    best = value

    assert best is not None
    _GS_MEMO[key] = best
    return best


def gs_sequence(ruleset: OctalRuleset, op: Operator, n_max: int) -> list:
    """Single-heap values G_s(0..n_max)."""
    return [gs(HeapPosition([(n, ruleset)]), op) for n in range(n_max + 1)]


def gs_table(colset: OctalRuleset, rowset: OctalRuleset, op: Operator,
             n_max: int, m_max: int) -> list:
    """Two-heap matrix: entry [m][n] = G_s of {n in colset, m in rowset}.

    Columns index the first-listed ruleset.  Under SEQUENTIAL the column
    heap is played first.  Both margins are validated against the
    single-heap sequences before the table is returned.
    """
    table = [[gs(HeapPosition([(n, colset), (m, rowset)]), op)
              for n in range(n_max + 1)]
             for m in range(m_max + 1)]
    col_single = gs_sequence(colset, op, n_max)
    row_single = gs_sequence(rowset, op, m_max)
    if table[0] != col_single:
        raise AssertionError("row 0 does not match the column ruleset's "
                             "single-heap values")
    if [row[0] for row in table] != row_single:
        raise AssertionError("column 0 does not match the row ruleset's "
                             "single-heap values")
    return table


@dataclass(frozen=True)
class PeriodReport:
    """An eventual period: values[n+period] = values[n] for n >= preperiod,
    verified up to index checked_up_to."""

    preperiod: int
    period: int
    block: tuple
    checked_up_to: int


def find_period(values: Sequence, max_preperiod: int,
                max_period: int) -> Optional[PeriodReport]:
    """Smallest period, then smallest preperiod, fitting the value list.

    Requires len(values) > max_preperiod + 2*max_period so that any
    reported period is confirmed over at least one full extra period beyond
    the preperiod.
    """
    vals = list(values)
    if len(vals) <= max_preperiod + 2 * max_period:
        raise ValueError("need more than max_preperiod + 2*max_period values")
    for p in range(1, max_period + 1):
        last_break = -1
        for i in range(len(vals) - p):
            if vals[i] != vals[i + p]:
                last_break = i
        start = last_break + 1
        if start <= max_preperiod:
            return PeriodReport(start, p, tuple(vals[start:start + p]),
                                len(vals) - 1)
    return None


_HEAP_GAME_MEMO: dict = {}
_POSITION_GAME_MEMO: dict = {}


def _heap_game(ruleset: OctalRuleset, n: int, op: Operator) -> Game:
    key = (_ruleset_key(ruleset), n, op)
    cached = _HEAP_GAME_MEMO.get(key)
    if cached is None:
        lefts = []
        rights = []
        for k, rest, p in moves(ruleset, n):
            rem = tuple((r, ruleset) for r in rest)
            sub = position_game(rem, op)
            lefts.append(shift(sub, p))
            rights.append(shift(sub, -p))
        cached = make_game(lefts, 0, rights)
        _HEAP_GAME_MEMO[key] = cached
    return cached


def position_game(heaps: Tuple[Tuple[int, OctalRuleset], ...],
                  op: Operator) -> Game:
    """The explicit game tree of a heap tuple under an operator.

    Each heap becomes a game whose Left and Right options mirror the same
    move set with +p and -p shifts, and the heaps are folded with the
    operator, so the result is impartial and its Left-first final score is
    the G_s value.
    """
    heaps = tuple(heaps)
    key = (tuple((n, _ruleset_key(r)) for n, r in heaps), op)
    cached = _POSITION_GAME_MEMO.get(key)
    if cached is None:
        if not heaps:
            cached = atom(0)
        else:
            cached = n_ary(op, [_heap_game(r, n, op) for n, r in heaps])
        _POSITION_GAME_MEMO[key] = cached
    return cached


def gs_oracle(position: HeapPosition, op: Operator) -> Fraction:
    """G_s via the explicit game tree: final_score_left of position_game.

    Exponentially larger than the direct recursion, hence the bean cap; it
    exists to cross-check gs, which must agree with it everywhere.
    """
    if position.total_beans() > ORACLE_BEAN_CAP:
        raise ValueError(f"oracle positions are capped at {ORACLE_BEAN_CAP} beans")
    if op is Operator.SEQUENTIAL:
        for _, ruleset in position.heaps:
            if not ruleset.taking_no_breaking():
                raise ValueError("sequential play needs all digits <= 3")
    return final_score_left(position_game(position.heaps, op))
