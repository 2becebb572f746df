"""Exact engine for scoring-play combinatorial games.

Games are finite trees {left options | score | right options} with exact
rational scores, compared by optimal final score rather than by who moves
last.  The package builds and evaluates such games, combines them under the
disjunctive, conjunctive, selective, and sequential operators, searches for
distinguishing contexts, reduces games toward canonical form, and computes
the scoring Sprague-Grundy function of octal heap games.
"""

from .core import (Game, Outcome, ScoreLike, as_score, atom, depth,
                   final_score_left, final_score_right, format_score,
                   make_game, negate, outcome, shift, size)
from .core import notation
from .operators import (EndRule, Operator, combine, conjunctive_sum,
                        disjunctive_sum, n_ary, selective_sum,
                        sequential_join)
from .equivalence import (SearchBudget, Witness, budget_is_heuristic,
                          bypass_reversible, dedup, default_budget,
                          distinguish, distinguisher_from_zero,
                          enumerate_test_games, geq_refuted, is_identity_for_impartials,
                          is_impartial, parse_budget, remove_dominated)
from .grundy import (HeapPosition, OctalRuleset, PeriodReport, find_period,
                     gs, gs_oracle, gs_sequence, gs_table, moves,
                     parse_ruleset, subtraction_ruleset)
from .positions import (EdgeColor, HackGraph, TFBoard, hackenbush_game,
                        load_hack_file, octal_to_game, toads_frogs_game)
from .cli import parse_game, print_game

__version__ = "1.0.0"

__all__ = [
    "EdgeColor", "EndRule", "Game", "HackGraph", "HeapPosition",
    "OctalRuleset", "Operator", "Outcome", "PeriodReport", "ScoreLike",
    "SearchBudget", "TFBoard", "Witness", "as_score", "atom",
    "budget_is_heuristic", "bypass_reversible", "combine", "conjunctive_sum",
    "dedup", "default_budget", "depth", "disjunctive_sum", "distinguish",
    "distinguisher_from_zero", "enumerate_test_games", "final_score_left",
    "final_score_right", "find_period", "format_score", "geq_refuted", "gs",
    "gs_oracle", "gs_sequence", "gs_table", "hackenbush_game",
    "is_identity_for_impartials", "is_impartial", "load_hack_file",
    "make_game", "moves", "n_ary", "negate", "notation", "octal_to_game",
    "outcome", "parse_budget", "parse_game", "parse_ruleset", "print_game",
    "remove_dominated", "sequential_join", "selective_sum", "shift", "size",
    "subtraction_ruleset", "toads_frogs_game",
]
