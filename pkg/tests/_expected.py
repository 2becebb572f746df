"""Frozen expected values shared across the test suite.

Every two-heap table here is rederived from scratch by the independent
recursion in tests/_reference.py, and the small positions are additionally
checked against explicit game-tree play; a constant only belongs in this
module once those independent routes agree on it.
"""

from fractions import Fraction

# ---------------------------------------------------------------------------
# Heap rulesets used throughout (text form accepted by parse_ruleset).

RULESET_TEXTS = (
    "123:1,2,3",
    "3333:2,2,2,2",
    "sub{4,5}",
    "30033:1,0,0,4,5",
    "333:1,2,3",
    "3311:1,2,3,4",
)

# Single-heap scoring values, disjunctive convention, n = 0..15.
SUB45_SINGLE = (0, 0, 0, 0, 4, 5, 5, 5, 5, 1, 0, 0, 0, 3, 4, 5)

# Single-heap values for (3333, 2222), n = 0..10: period 5 from the start.
T3333_SINGLE = (0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 0)

# The subtraction set {4,5} sequence settles into a longer cycle once the
# opening irregularity passes; scanned to n = 200.
SUB45_PREPERIOD = 27
SUB45_PERIOD = 10
SUB45_BLOCK = (3, 2, 1, 0, 1, 2, 3, 4, 5, 4)

# Other single-heap margins (index = heap size).
DISJ_123_SINGLE = (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0)
DISJ_3111_SINGLE = (0, 1, 2, 3, 4, -3, 4, -3, 4)
SEL_3311_SINGLE = (0, 1, 2, 3, 4, -1, 2, 3, 0, 1, 2, 1, 0)
SEL_333_SINGLE = (0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1, 0)
SEQ_30033_SINGLE = (0, 1, 0, 1, 4, 5, 4, 5, 4, 1, 0, 1, 0)

# ---------------------------------------------------------------------------
# Two-heap tables, entry [m][n] for the pair (n in the first-named ruleset,
# m in the second).  DISJ_123_123 is symmetric.

DISJ_123_123 = (
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (3, 2, 3, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3),
    (2, 3, 2, 1, 0, 1, 2, 3, 2, 1, 0, 1, 2),
    (3, 2, 3, 2, 1, 0, 3, 2, 3, 2, 1, 2, 3),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (2, 1, 2, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2),
    (3, 2, 3, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3),
    (2, 3, 2, 1, 0, 1, 2, 3, 2, 1, 0, 1, 2),
    (1, 2, 1, 2, 1, 2, 1, 2, 3, 2, 1, 0, 1),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
)

DISJ_123_3111 = (
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2),
    (3, 2, 3, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3),
    (4, 3, 4, 1, 2, 1, 4, 3, 2, 1, 2, 3, 4),
    (-3, 4, -3, 6, 5, 6, -3, -2, 5, 6, 5, -2, -3),
    (4, -3, 4, 5, 6, -1, 4, 3, 4, -1, 0, 3, 4),
    (-3, 4, -3, 6, 5, 6, -3, -2, 5, 6, 5, -2, -3),
    (4, -3, 4, 5, 6, -1, 4, 3, 4, -1, 0, 3, 4),
    (-3, 4, -3, 6, 5, 6, -3, -2, 5, 6, 5, -2, -3),
    (4, -3, 4, 5, 6, -1, 4, 3, 4, -1, 0, 3, 4),
    (-3, 4, -3, 6, 5, 6, -3, -2, 5, 6, 5, -2, -3),
    (4, -3, 4, 5, 6, -1, 4, 3, 4, -1, 0, 3, 4),
)

SEL_3311_333 = (
    (0, 1, 2, 3, 4, -1, 2, 3, 0, 1, 2, 1, 0),
    (1, 2, 3, 4, 5, 2, 3, 4, 1, 2, 3, 2, 1),
    (2, 3, 4, 5, 6, 3, 4, 5, 2, 3, 4, 3, 2),
    (3, 4, 5, 6, 7, 4, 5, 6, 3, 4, 5, 4, 3),
    (2, 3, 4, 5, 6, 1, 2, 3, 2, 3, 4, 3, 2),
    (1, 2, 3, 4, 5, 0, 1, 2, 1, 2, 3, 2, 1),
    (0, 1, 2, 3, 4, 1, 2, 3, 2, 1, 2, 1, 0),
    (1, 2, 3, 4, 5, 2, 3, 4, 3, 2, 3, 2, 1),
    (2, 3, 4, 5, 6, 3, 4, 5, 4, 3, 4, 3, 2),
    (3, 4, 5, 6, 7, 2, 3, 4, 3, 2, 3, 4, 3),
    (2, 3, 4, 5, 6, 1, 2, 3, 2, 1, 2, 3, 2),
    (1, 2, 3, 4, 5, 0, 1, 2, 1, 0, 1, 2, 1),
    (0, 1, 2, 3, 4, 1, 2, 3, 2, 1, 2, 3, 2),
)

SEQ_123_30033 = (
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (4, -3, 4, 5, 6, -1, -2, 3, 4, 5, 0, -1, 2),
    (5, -4, 5, 6, 7, -2, -3, 4, 5, 6, -1, -2, 3),
    (4, -3, 4, 5, 6, -1, -2, 3, 4, 5, 0, -1, 2),
    (5, -4, 5, 6, 7, -2, -3, 4, 5, 6, -1, -2, 3),
    (4, -3, 4, 5, 6, -1, -2, 3, 4, 5, 0, -1, 2),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
    (1, 0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1),
    (0, 1, 0, 3, 2, 3, 0, 1, 2, 3, 2, 1, 0),
)

# ---------------------------------------------------------------------------
# Board and graph positions with pinned values.

TBF_TEXT = "{{.|0|{-1|-1|.}}|0|{{.|1|1}|0|.}}"
TTBF_TEXT = ("{{0|0|{{{.|0|0}|-1|.}|-1|.}}|0|"
             "{{{.|1|{0|0|.}}|1|{{.|2|2}|1|.}}|0|.}}")

CONJ_BTF_TFB_TEXT = "{{.|1|{0|0|.}}|0|{{.|0|0}|-1|.}}"
SEL_BTF_TFB_TEXT = (
    "{{.|1|{.|1|{0|0|.}},{0|0|.},{{.|0|0}|0|{0|0|.}}}|0|"
    "{{{.|0|0}|0|{0|0|.}},{.|0|0},{{.|0|0}|-1|.}|-1|.}}")
SEQ_BTF_TFB_TEXT = "{.|0|{{{.|0|0}|-1|.}|-1|.}}"
SEQ_BTF_TFB_FINALS = (Fraction(0), Fraction(-1))

# Path graph: a red edge on the ground, a blue edge on top of it.
HACK_PATH_EDGES = ((1, 2, "R"), (2, 3, "B"))
HACK_PATH_GROUND = (1,)
HACK_PATH_TEXTS = {
    1: "{{.|1|0}|0|-2}",
    2: "{{.|1|0}|0|-1}",
    3: "{{.|1|0}|0|0}",
}
HACK_PATH_OUTCOMES = {1: "R", 2: "R", 3: "TIE"}

# Arch graph: two grounded pillars joined at the top, one blue edge between
# two red ones.
HACK_ARCH_EDGES = ((4, 5, "R"), (5, 7, "B"), (6, 7, "R"))
HACK_ARCH_GROUND = (4, 6)
HACK_ARCH_CONJ_TEXT = "{{.|1|-1}|0|{{.|0|-1}|-1|-3}}"
HACK_ARCH_SEL_TEXT = "{{.|1|-1,{.|0|-1}}|0|{{.|0|-1}|-1|-3}}"
HACK_ARCH_SEQ_TEXT = "{{.|1|{.|0|-1}}|0|{{.|0|-1}|-1|-3}}"
HACK_ARCH_SEL_FINALS = (Fraction(-1), Fraction(-1))
HACK_ARCH_SEQ_FINALS = (Fraction(0), Fraction(-1))

# Two separately grounded stalks; splits into a disjunctive sum.
HACK_TWO_COMP_EDGES = ((1, 3, "B"), (3, 4, "R"), (2, 5, "R"))
HACK_TWO_COMP_GROUND = (1, 2)
HACK_TWO_COMP_PARTS = ("{2|0|{0|-1|.}}", "{.|0|-1}")
HACK_TWO_COMP_SUM_TEXT = ("{{.|2|1}|0|"
                          "{{.|0|-1}|-1|{-1|-2|.}},{1|-1|{-1|-2|.}}}")

# ---------------------------------------------------------------------------
# Assorted pinned games (text form accepted by parse_game).

RATIONAL_SUM_ARGS = ("{3|2|-4}", "{1.5|0.5|1}")
RATIONAL_SUM_TEXT = "{{4.5|3.5|4},{4.5|3.5|-2.5}|2.5|{-2.5|-3.5|-3},{4|3|-3}}"

DOMEX_TEXT = "{3,{3,{3|2|.}|1|.},{3|2|.}|0|.}"
THEOREM_EQ_G_TEXT = "{.|1|{.|2|{.|3|4,{.|5|6}}}}"
THEOREM_EQ_H_TEXT = "{.|1|{.|2|{.|3|4}},{.|2|{.|3|4,{.|5|6}}}}"
NONINVERTIBLE_TEXT = "{2,{1|2|3}|0|-2,{-3|-2|-1}}"
IMPARTIAL_EXAMPLE_TEXT = "{2,{11|4|-3}|3|4,{9|2|-5}}"
IDENTITY_CANDIDATE_TEXT = "{{0|0|0}|0|{0|0|0}}"

# Outcome-class sign representatives: (final_score_left, final_score_right).
OUTCOME_REPS = {
    "L": (1, 1),
    "R": (-1, -1),
    "N": (1, -1),
    "P": (-1, 1),
    "TIE": (0, 0),
}
