"""Exact values for scoring-play combinatorial games.

A game is a finite tree {left options | score | right options}.  Scores are
exact rationals, read as Left's points minus Right's points.  Play stops for
a player when that player has no option; the final score then decides the
winner, so evaluation is a minimax over the tree: Left maximizes the score,
Right minimizes it.

Games are interned: structurally equal trees are the same Python object, so
identity comparison, hashing, and memoization are all O(1).  Construction
goes through :func:`make_game`, which sorts each option list canonically and
drops structural duplicates.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Union

ScoreLike = Union[int, float, str, Fraction]

__all__ = [
    "Game",
    "Outcome",
    "ScoreLike",
    "as_score",
    "atom",
    "depth",
    "final_score_left",
    "final_score_right",
    "make_game",
    "negate",
    "outcome",
    "shift",
    "size",
]


def as_score(value: ScoreLike) -> Fraction:
    """Coerce a score-like value to an exact Fraction.

    Accepts ints, Fractions, strings like "-2", "3/2" or "1.5", and floats
    (converted through their decimal repr, so 1.5 becomes 3/2).  Arithmetic
    on Fractions is arbitrary precision, so score computations can never
    overflow or wrap.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    raise TypeError(f"cannot interpret {value!r} as a score")


def format_score(value: Fraction) -> str:
    """Render a score: integers bare, everything else as p/q."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Game:
    """An immutable, interned scoring-play game tree.

    Do not instantiate directly; use :func:`make_game`.  Because every game
    is interned, structural equality coincides with object identity and the
    default (identity) hash is a correct structural hash.
    """

    __slots__ = ("score", "left", "right", "_serial", "_key", "_fsl", "_fsr",
                 "_neg", "_shifts", "_depth", "_size")

    def __init__(self, score: Fraction, left: tuple, right: tuple):
        self.score = score
        self.left = left
        self.right = right
        self._serial = 0
        self._key = None
        self._fsl = None
        self._fsr = None
        self._neg = None
        self._shifts = None
        self._depth = None
        self._size = None

    def is_atomic(self) -> bool:
        """True when both option lists are empty."""
        return not self.left and not self.right

    def __repr__(self) -> str:
        return f"<Game {notation(self)}>"


_POOL: dict = {}


def notation(g: Game) -> str:
    """Canonical text form of a game; atomic games print as bare scores.

    Computed on demand and cached.  The string of a heavily shared tree can
    be exponentially longer than the pooled structure, so nothing on the
    construction path may call this; it is for printing and small-game
    bookkeeping only.
    """
    if g._key is None:
        if g.is_atomic():
            g._key = format_score(g.score)
        else:
            lt = ",".join(notation(o) for o in g.left) if g.left else "."
            rt = ",".join(notation(o) for o in g.right) if g.right else "."
            g._key = "{" + lt + "|" + format_score(g.score) + "|" + rt + "}"
    return g._key


def _sort_key(g: Game):
    # atoms first in numeric order, then composites in interning order;
    # cheap on purpose (never builds notation strings)
    if g.is_atomic():
        return (0, g.score, 0)
    return (1, 0, g._serial)


def _canonical_options(options: Iterable[Game]) -> tuple:
    seen = dict.fromkeys(options)
    for o in seen:
        if not isinstance(o, Game):
            raise TypeError(f"option {o!r} is not a Game")
    return tuple(sorted(seen, key=_sort_key))


def make_game(left: Iterable[Game], score: ScoreLike, right: Iterable[Game]) -> Game:
    """The one constructor: interns, sorts options canonically, dedups."""
    s = as_score(score)
    lt = _canonical_options(left)
    rt = _canonical_options(right)
    key = (s, lt, rt)
    g = _POOL.get(key)
    if g is None:
        g = Game(s, lt, rt)
        g._serial = len(_POOL)
        _POOL[key] = g
    return g


def atom(score: ScoreLike) -> Game:
    """The atomic game {.|score|.}."""
    return make_game((), score, ())


def final_score_left(g: Game) -> Fraction:
    """Best final score when Left moves first (Left maximizes).

    Equals the node score when Left has no option; otherwise the max over
    Left options of their final score with Right to move.  Memoized per node.
    """
    if g._fsl is None:
        if not g.left:
            g._fsl = g.score
        else:
            g._fsl = max(final_score_right(o) for o in g.left)
    return g._fsl


def final_score_right(g: Game) -> Fraction:
    """Best final score when Right moves first (Right minimizes)."""
    if g._fsr is None:
        if not g.right:
            g._fsr = g.score
        else:
            g._fsr = min(final_score_left(o) for o in g.right)
    return g._fsr


class Outcome(enum.Enum):
    """Who wins under optimal play: L, R, first player (N), second (P), or TIE."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"
    TIE = "TIE"

    def mirrored(self) -> "Outcome":
        """Outcome of the negated game: swaps L and R, fixes N, P, TIE."""
        if self is Outcome.L:
            return Outcome.R
        if self is Outcome.R:
            return Outcome.L
        return self


def outcome(g: Game) -> Outcome:
    """Classify a game by the signs of its two final scores.

    With sl the Left-first and sr the Right-first final score:
    both favorable or zero with one positive gives L (mirror for R),
    (+,-) gives N, (-,+) gives P, and (0,0) is a TIE.
    """
    sl = final_score_left(g)
    sr = final_score_right(g)
    if sl > 0:
        return Outcome.N if sr < 0 else Outcome.L
    if sl < 0:
        return Outcome.P if sr > 0 else Outcome.R
    if sr > 0:
        return Outcome.L
    if sr < 0:
        return Outcome.R
    return Outcome.TIE


def negate(g: Game) -> Game:
    """The negation {-G^R | -G^S | -G^L}: swap sides, negate every score."""
    if g._neg is None:
        n = make_game([negate(o) for o in g.right], -g.score,
                      [negate(o) for o in g.left])
        g._neg = n
        n._neg = g
    return g._neg


def shift(g: Game, r: ScoreLike) -> Game:
    """Add r to every score in the tree; the shape is unchanged."""
    r = as_score(r)
    if r == 0:
        return g
    if g._shifts is None:
        g._shifts = {}
    cached = g._shifts.get(r)
    if cached is None:
        cached = make_game([shift(o, r) for o in g.left], g.score + r,
                           [shift(o, r) for o in g.right])
        g._shifts[r] = cached
    return cached


def depth(g: Game) -> int:
    """Longest root-to-leaf path, counted in edges (atomic games: 0)."""
    if g._depth is None:
        opts = g.left + g.right
        g._depth = 1 + max(depth(o) for o in opts) if opts else 0
    return g._depth


def size(g: Game) -> int:
    """Total node count of the tree, counting repeats (atomic games: 1)."""
    if g._size is None:
        g._size = 1 + sum(size(o) for o in g.left) + sum(size(o) for o in g.right)
    return g._size
