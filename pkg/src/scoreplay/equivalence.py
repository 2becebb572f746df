"""Budgeted equivalence queries and reduction toward canonical form.

Game equality and the partial order are defined by quantifying over all
games X: G >= H when, for every X and every favorable-for-Left outcome set
O, H+X in O implies G+X in O.  That quantifier is not finitely checkable,
so every query here is a semi-decision over a deterministic enumeration of
test games bounded by a :class:`SearchBudget`: a returned :class:`Witness`
is a hard refutation (replaying it reproduces the violation), while "no
witness" only means none was found within budget.  Reductions that rely on
non-refutation are therefore heuristic unless the budget covers the default
enumeration; :func:`budget_is_heuristic` reports which.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (Game, as_score, atom, depth, final_score_left,
                   final_score_right, make_game, negate, notation, outcome,
                   shift)
from .operators import Operator, combine

__all__ = [
    "SearchBudget",
    "Witness",
    "budget_is_heuristic",
    "bypass_reversible",
    "dedup",
    "default_budget",
    "distinguish",
    "distinguisher_from_zero",
    "enumerate_test_games",
    "geq_refuted",
    "is_identity_for_impartials",
    "is_impartial",
    "parse_budget",
    "remove_dominated",
]

BUDGET_ENV_VAR = "SCOREPLAY_BUDGET"


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on the test-game enumeration.

    max_depth and max_width bound the generated trees, score_bound fixes the
    integer score grid [-bound, bound], and max_candidates caps the stream
    length.  Enumeration is deterministic given a budget.
    """

    max_depth: int = 3
    max_width: int = 2
    score_bound: Fraction = Fraction(3)
    max_candidates: int = 20000

    def __post_init__(self):
        object.__setattr__(self, "score_bound", as_score(self.score_bound))
        if self.max_depth < 0 or self.max_width < 0 or self.score_bound < 0:
            raise ValueError("budget bounds must be nonnegative")
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be positive")


def parse_budget(text: str, base: Optional[SearchBudget] = None) -> SearchBudget:
    """Parse "depth=3,width=2,bound=3,cand=20000" (any subset of keys)."""
    values = {
        "depth": (base or SearchBudget()).max_depth,
        "width": (base or SearchBudget()).max_width,
        "bound": (base or SearchBudget()).score_bound,
        "cand": (base or SearchBudget()).max_candidates,
    }
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, raw = part.partition("=")
        key = key.strip()
        if key not in values or not raw:
            raise ValueError(f"bad budget item {part!r}; "
                             "expected depth=, width=, bound=, cand=")
        if key == "bound":
            values[key] = as_score(raw.strip())
        else:
            values[key] = int(raw)
    return SearchBudget(values["depth"], values["width"],
                        values["bound"], values["cand"])


def default_budget() -> SearchBudget:
    """The standard budget, overridable via the SCOREPLAY_BUDGET variable."""
    text = os.environ.get(BUDGET_ENV_VAR)
    if text:
        return parse_budget(text)
    return SearchBudget()


@dataclass(frozen=True)
class Witness:
    """A test game x that refutes a claimed relation.

    class_violated is one of "L>=", "R>=", "L>", "R>" for order refutations
    (the outcome set containing op(H,x) but not op(G,x)) or "OUTCOME" for an
    equality refutation; detail records the outcomes of both sums.
    """

    x: Game
    class_violated: str
    detail: str


# Outcome sets used in the order definitions.  The first four ("Left does
# at least this well") define >=; the mirrored four define <=.
_GE_CLASSES = (
    ("L>=", lambda sl, sr: sl >= 0),
    ("R>=", lambda sl, sr: sr >= 0),
    ("L>", lambda sl, sr: sl > 0),
    ("R>", lambda sl, sr: sr > 0),
)
_LE_CLASSES = (
    ("L<=", lambda sl, sr: sl <= 0),
    ("R<=", lambda sl, sr: sr <= 0),
    ("L<", lambda sl, sr: sl < 0),
    ("R<", lambda sl, sr: sr < 0),
)

_ENUM_CACHE: dict = {}

# Options for depth >= 2 candidates are drawn from a fixed-size prefix of
# the previously generated games; exhausting all option menus over the full
# pool would dwarf any candidate cap long before adding variety.
_OPTION_POOL_LIMIT = 30
_DEEP_POOL_LIMIT = 10


class _StreamFull(Exception):
    pass


def enumerate_test_games(budget: SearchBudget) -> tuple:
    """Deterministic, duplicate-free test games for a budget.

    Order: atomics over the integer score grid, then the one-sided switch
    shapes {.|a|b} and {a|b|.}, then depth-leveled games whose options come
    from a bounded prefix of the games generated so far, stopping at
    max_candidates.  The result is cached per budget.
    """
    cached = _ENUM_CACHE.get(budget)
    if cached is not None:
        return cached
    bound = int(budget.score_bound)
    grid = [Fraction(k) for k in range(-bound, bound + 1)]
    games: list = []
    seen: set = set()

    def push(g: Game) -> None:
        if g not in seen:
            if len(games) >= budget.max_candidates:
                raise _StreamFull
            seen.add(g)
            games.append(g)

    try:
        for s in grid:
            push(atom(s))
        if budget.max_depth >= 1 and budget.max_width >= 1:
            for a in grid:
                for b in grid:
                    push(make_game([], a, [atom(b)]))
            for a in grid:
                for b in grid:
                    push(make_game([atom(a)], b, []))
            for d in range(1, budget.max_depth + 1):
                shallow = [g for g in games if depth(g) <= d - 1]
                pool = shallow[:_OPTION_POOL_LIMIT]
                for g in (g for g in shallow if depth(g) == d - 1):
                    if len(pool) >= _OPTION_POOL_LIMIT + _DEEP_POOL_LIMIT:
                        break
                    if g not in pool:
                        pool.append(g)
                menus = [()]
                for w in range(1, budget.max_width + 1):
                    menus.extend(itertools.combinations(pool, w))
                for s in grid:
                    for lt in menus:
                        for rt in menus:
                            if not lt and not rt:
                                continue
                            push(make_game(lt, s, rt))
    except _StreamFull:
        pass
    result = tuple(games)
    _ENUM_CACHE[budget] = result
    return result


def _refuted(g: Game, h: Game, classes, op: Operator,
             budget: Optional[SearchBudget]) -> Optional[Witness]:
    budget = budget if budget is not None else default_budget()
    for x in enumerate_test_games(budget):
        hx = combine(op, h, x)
        hsl, hsr = final_score_left(hx), final_score_right(hx)
        gx = None
        for name, member in classes:
            if not member(hsl, hsr):
                continue
            if gx is None:
                gx = combine(op, g, x)
                gsl, gsr = final_score_left(gx), final_score_right(gx)
            if not member(gsl, gsr):
                detail = (f"op(G,X)={outcome(gx).value} "
                          f"op(H,X)={outcome(hx).value}")
                return Witness(x, name, detail)
    return None


def geq_refuted(g: Game, h: Game, op: Operator = Operator.DISJUNCTIVE,
                budget: Optional[SearchBudget] = None) -> Optional[Witness]:
    """Search for an X refuting G >= H; None means none found in budget.

    A refutation is an X with op(H,X) in one of L>=, R>=, L>, R> while
    op(G,X) is not.  Absence of a witness never proves G >= H.
    """
    return _refuted(g, h, _GE_CLASSES, op, budget)


def _leq_refuted(g: Game, h: Game, op: Operator = Operator.DISJUNCTIVE,
                 budget: Optional[SearchBudget] = None) -> Optional[Witness]:
    """Search for an X refuting G <= H, over the mirrored outcome sets.

    The same x refutes G >= H through a class exactly when it refutes
    H <= G through the complementary class, so witnesses here carry the
    labels "L<=", "R<=", "L<", "R<".
    """
    return _refuted(g, h, _LE_CLASSES, op, budget)


def distinguish(g: Game, h: Game, op: Operator = Operator.DISJUNCTIVE,
                budget: Optional[SearchBudget] = None) -> Optional[Witness]:
    """First enumerated X with outcome(op(G,X)) != outcome(op(H,X))."""
    budget = budget if budget is not None else default_budget()
    for x in enumerate_test_games(budget):
        og = outcome(combine(op, g, x))
        oh = outcome(combine(op, h, x))
        if og != oh:
            return Witness(x, "OUTCOME",
                           f"op(G,X)={og.value} op(H,X)={oh.value}")
    return None


def _max_abs_score(g: Game) -> Fraction:
    best = abs(g.score)
    for o in g.left + g.right:
        best = max(best, _max_abs_score(o))
    return best


def distinguisher_from_zero(g: Game) -> Game:
    """Construct a P with outcome(G + P) != outcome(P), directly.

    For a game with Left options, P = {.|1|b} where b is two less than minus
    the largest absolute score in G: Right's threat in P is so heavy that the
    sums' outcomes must separate.  If only Right options exist, the mirrored
    switch works; a nonzero atomic game is separated from zero by P = 0.
    Rejects atomic zero, which is genuinely equal to itself.
    """
    if g.is_atomic():
        if g.score == 0:
            raise ValueError("atomic 0 cannot be distinguished from zero")
        return atom(0)
    b = -(_max_abs_score(g) + 2)
    if g.left:
        return make_game([], 1, [atom(b)])
    return make_game([atom(-b)], -1, [])


def dedup(g: Game) -> Game:
    """Rebuild a game bottom-up, dropping structurally identical siblings.

    Construction through make_game already sorts and dedups, so this is the
    identity on any game built by this package; it exists as the explicit
    first reduction step and as a re-normalizer for foreign trees.
    """
    return make_game([dedup(o) for o in g.left], g.score,
                     [dedup(o) for o in g.right])


def _dominates(a: Game, b: Game, classes_fwd, classes_bwd,
               budget: SearchBudget, cache: dict) -> bool:
    """Budget-confirmed a-covers-b on one side, checked in both phrasings."""
    key = (a, b)
    got = cache.get(key)
    if got is None:
        got = (_refuted(a, b, classes_fwd, Operator.DISJUNCTIVE, budget) is None
               and _refuted(b, a, classes_bwd, Operator.DISJUNCTIVE, budget) is None)
        cache[key] = got
    return got


def _prune_side(options: tuple, for_left: bool, budget: SearchBudget,
                cache: dict) -> list:
    if for_left:
        fwd, bwd = _GE_CLASSES, _LE_CLASSES
    else:
        fwd, bwd = _LE_CLASSES, _GE_CLASSES
    kept = []
    for b in options:
        removed = False
        for a in options:
            if a is b:
                continue
            if not _dominates(a, b, fwd, bwd, budget, cache):
                continue
            if (not _dominates(b, a, fwd, bwd, budget, cache)
                    or notation(a) < notation(b)):
                removed = True
                break
        if not removed:
            kept.append(b)
    return kept


def remove_dominated(g: Game, budget: Optional[SearchBudget] = None) -> Game:
    """Drop options covered by a sibling, recursively, bottom-up.

    A Left option B goes when some sibling A is at least as good for Left:
    no budget witness refutes A >= B and none refutes B <= A.  Right options
    mirror (A at most B).  When two options cover each other, the one with
    the larger canonical notation goes, so exact duplicates and budget-equal
    options collapse deterministically.  Soundness is budget-relative; see
    budget_is_heuristic.
    """
    budget = budget if budget is not None else default_budget()
    cache: dict = {}

    def reduce(node: Game) -> Game:
        left = [reduce(o) for o in node.left]
        right = [reduce(o) for o in node.right]
        left = _prune_side(tuple(dict.fromkeys(left)), True, budget, cache)
        right = _prune_side(tuple(dict.fromkeys(right)), False, budget, cache)
        return make_game(left, node.score, right)

    return reduce(g)


def bypass_reversible(g: Game, budget: Optional[SearchBudget] = None,
                      max_passes: int = 32) -> Game:
    """Replace reversible root options by what they reverse through.

    A Left option A is reversible when some Right response A^R is, within
    budget, no better for Right than G itself (A^R <= G unrefuted, checked
    both ways); then A is replaced by A^R's Left options.  Right options
    mirror.  Repeats until stable; raises RuntimeError if max_passes is hit,
    since each replacement must shrink a well-founded measure.

    Only responses that leave the mover a continuation qualify: promoting an
    optionless A^R would delete A outright, and that does not preserve
    equality here because the deleted line's score shift vanishes with it
    (for G = {{3|0|-3}|0|.} the response -3 is <= G, yet G differs from
    {.|0|.} already at X = 0).  The replacement must inherit A^R's options.
    """
    budget = budget if budget is not None else default_budget()
    for _ in range(max_passes):
        new_left = None
        for a in g.left:
            for ar in a.right:
                if not ar.left:
                    continue
                if (_leq_refuted(ar, g, Operator.DISJUNCTIVE, budget) is None
                        and geq_refuted(g, ar, Operator.DISJUNCTIVE, budget) is None):
                    others = [o for o in g.left if o is not a]
                    new_left = others + list(ar.left)
                    break
            if new_left is not None:
                break
        if new_left is not None:
            g = make_game(new_left, g.score, g.right)
            continue
        new_right = None
        for d in g.right:
            for dl in d.left:
                if not dl.right:
                    continue
                if (geq_refuted(dl, g, Operator.DISJUNCTIVE, budget) is None
                        and _leq_refuted(g, dl, Operator.DISJUNCTIVE, budget) is None):
                    others = [o for o in g.right if o is not d]
                    new_right = others + list(dl.right)
                    break
            if new_right is not None:
                break
        if new_right is None:
            return g
        g = make_game(g.left, g.score, new_right)
    raise RuntimeError(f"bypass_reversible did not stabilize in {max_passes} passes")


def budget_is_heuristic(budget: SearchBudget) -> bool:
    """True unless the budget's enumeration covers the default one.

    Reductions confirmed over a covering enumeration satisfy every check the
    acceptance family would make; anything less is flagged heuristic.
    """
    if budget == SearchBudget():
        return False
    base = enumerate_test_games(SearchBudget())
    return not set(enumerate_test_games(budget)).issuperset(base)


_IMPARTIAL_CACHE: dict = {}


def is_impartial(g: Game) -> bool:
    """Structural impartiality: the two sides mirror at every node.

    After subtracting the node score, each Left option must be the negation
    of some Right option and vice versa, recursively; in particular option
    emptiness matches on both sides.  Structural equality of normalized
    trees stands in for game equality, which keeps the test decidable.
    """
    cached = _IMPARTIAL_CACHE.get(g)
    if cached is not None:
        return cached
    if bool(g.left) != bool(g.right):
        result = False
    elif not all(is_impartial(o) for o in g.left + g.right):
        result = False
    else:
        norm_left = {shift(o, -g.score) for o in g.left}
        neg_right = {negate(shift(o, -g.score)) for o in g.right}
        result = norm_left == neg_right
    _IMPARTIAL_CACHE[g] = result
    return result


def is_identity_for_impartials(candidate: Game, op: Operator,
                               budget: Optional[SearchBudget] = None) -> bool:
    """Does op(G, candidate) keep every enumerated impartial G's outcome?

    For the sequential join, which is not commutative, both orders must
    preserve the outcome.  Semi-decision: quantifies over the impartial
    games within the budgeted enumeration only.
    """
    budget = budget if budget is not None else default_budget()
    for x in enumerate_test_games(budget):
        if not is_impartial(x):
            continue
        if outcome(combine(op, x, candidate)) != outcome(x):
            return False
        if (op is Operator.SEQUENTIAL
                and outcome(combine(op, candidate, x)) != outcome(x)):
            return False
    return True
