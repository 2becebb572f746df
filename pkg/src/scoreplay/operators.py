"""The four ways to combine scoring-play games.

disjunctive_sum   move in exactly one component
conjunctive_sum   move in every component where you have a move
selective_sum     move in any nonempty subset of components with moves
sequential_join   components are ordered; move in the first unfinished one

The first three take an ending rule.  Under the LONG rule (the default
everywhere) a player is stuck only when stuck in every component; under the
SHORT rule, being stuck in any single component ends the game.  The rules
do not apply to the sequential join, whose ending condition is inherent in
the ordering.

All operators add the component scores at every node and memoize on the
interned operand pair, so repeated subgames cost nothing.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .core import Game, make_game, shift

__all__ = [
    "EndRule",
    "Operator",
    "combine",
    "conjunctive_sum",
    "disjunctive_sum",
    "n_ary",
    "selective_sum",
    "sequential_join",
]


class Operator(enum.Enum):
    DISJUNCTIVE = "disjunctive"
    CONJUNCTIVE = "conjunctive"
    SELECTIVE = "selective"
    SEQUENTIAL = "sequential"


class EndRule(enum.Enum):
    LONG = "long"
    SHORT = "short"


_MEMO: dict = {}


def disjunctive_sum(g: Game, h: Game, rule: EndRule = EndRule.LONG) -> Game:
    """{G^L+H, G+H^L | G^S+H^S | G^R+H, G+H^R}.

    The option union is naturally empty only when both components are empty
    on that side, which is the LONG ending rule; SHORT instead forces a side
    empty as soon as either component is empty there.
    """
    key = (Operator.DISJUNCTIVE, rule, g, h)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached
    if rule is EndRule.SHORT and (not g.left or not h.left):
        left: list = []
    else:
        left = [disjunctive_sum(o, h, rule) for o in g.left]
        left += [disjunctive_sum(g, o, rule) for o in h.left]
    if rule is EndRule.SHORT and (not g.right or not h.right):
        right: list = []
    else:
        right = [disjunctive_sum(o, h, rule) for o in g.right]
        right += [disjunctive_sum(g, o, rule) for o in h.right]
    result = make_game(left, g.score + h.score, right)
    _MEMO[key] = result
    return result


def conjunctive_sum(g: Game, h: Game, rule: EndRule = EndRule.LONG) -> Game:
    """{G^L join H^L | G^S+H^S | G^R join H^R} over option pairs.

    A move is one option from each component.  Under LONG, when exactly one
    component has no option on a side, play continues in the other alone (an
    atomic component therefore acts as a score shift); under SHORT the side
    is empty as soon as either component is.
    """
    key = (Operator.CONJUNCTIVE, rule, g, h)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached

    def side(gopts: tuple, hopts: tuple) -> list:
        if gopts and hopts:
            return [conjunctive_sum(a, b, rule) for a in gopts for b in hopts]
        if rule is EndRule.SHORT:
            return []
        if gopts:
            return [conjunctive_sum(a, h, rule) for a in gopts]
        if hopts:
            return [conjunctive_sum(g, b, rule) for b in hopts]
        return []

    result = make_game(side(g.left, h.left), g.score + h.score,
                       side(g.right, h.right))
    _MEMO[key] = result
    return result


def selective_sum(g: Game, h: Game, rule: EndRule = EndRule.LONG) -> Game:
    """{G^L+H, G+H^L, G^L+H^L | G^S+H^S | ...}: move in one or both parts.

    The three-way union is empty only when both components are empty on that
    side, which again is LONG; SHORT empties a side when either component is
    empty there.
    """
    key = (Operator.SELECTIVE, rule, g, h)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached

    def side(gopts: tuple, hopts: tuple) -> list:
        if rule is EndRule.SHORT and (not gopts or not hopts):
            return []
        opts = [selective_sum(a, h, rule) for a in gopts]
        opts += [selective_sum(g, b, rule) for b in hopts]
        opts += [selective_sum(a, b, rule) for a in gopts for b in hopts]
        return opts

    result = make_game(side(g.left, h.left), g.score + h.score,
                       side(g.right, h.right))
    _MEMO[key] = result
    return result


def sequential_join(g: Game, h: Game) -> Game:
    """Play all of G first, then H.

    For non-atomic G this is {G^L join H | G^S+H^S | G^R join H}; a side on
    which G is empty stays empty even if H could move there.  Once G is
    atomic its score is banked and play is exactly H, so atomic join is a
    score shift.  The ending rules play no part.
    """
    if g.is_atomic():
        return shift(h, g.score)
    key = (Operator.SEQUENTIAL, g, h)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached
    result = make_game([sequential_join(o, h) for o in g.left],
                       g.score + h.score,
                       [sequential_join(o, h) for o in g.right])
    _MEMO[key] = result
    return result


def combine(op: Operator, g: Game, h: Game, rule: EndRule = EndRule.LONG) -> Game:
    """Apply the operator named by ``op`` to two games."""
    if op is Operator.DISJUNCTIVE:
        return disjunctive_sum(g, h, rule)
    if op is Operator.CONJUNCTIVE:
        return conjunctive_sum(g, h, rule)
    if op is Operator.SELECTIVE:
        return selective_sum(g, h, rule)
    if op is Operator.SEQUENTIAL:
        return sequential_join(g, h)
    raise ValueError(f"unknown operator {op!r}")


def n_ary(op: Operator, games: Iterable[Game], rule: EndRule = EndRule.LONG) -> Game:
    """Left fold of a binary operator over a nonempty game sequence.

    Order matters only for SEQUENTIAL; the other three are commutative and
    associative up to canonical form.
    """
    games = list(games)
    if not games:
        raise ValueError("n_ary needs at least one game")
    acc = games[0]
    for nxt in games[1:]:
        acc = combine(op, acc, nxt, rule)
    return acc
