"""Converters from concrete rulesets to explicit game trees.

Three board games become Games here: Toads & Frogs (pieces on a strip,
score = Left's jumps minus Right's), scoring Hackenbush (cut edges, score
per removed edge under one of three point variants), and octal heap
positions (delegated to the grundy module's tree builder).

Boards and graphs are capped at 12 cells / 12 edges because the game trees
grow exponentially with position size.
"""

from __future__ import annotations

import enum
from typing import Iterable, Optional, Sequence, Tuple

from .core import Game, atom, make_game, shift
from .grundy import ORACLE_BEAN_CAP, HeapPosition
from .grundy import position_game as _octal_position_game
from .operators import Operator, n_ary

__all__ = [
    "EdgeColor",
    "HackGraph",
    "TFBoard",
    "hackenbush_game",
    "load_hack_file",
    "octal_to_game",
    "toads_frogs_game",
]

MAX_TF_CELLS = 12
MAX_HACK_EDGES = 12


class TFBoard:
    """A Toads & Frogs strip: T (toad, moves right), F (frog, moves left),
    B (blank; '.' is accepted as an alias on input)."""

    __slots__ = ("cells",)

    def __init__(self, cells: str):
        cells = cells.replace(".", "B")
        if not cells:
            raise ValueError("board must be nonempty")
        if len(cells) > MAX_TF_CELLS:
            raise ValueError(f"boards are capped at {MAX_TF_CELLS} cells")
        if any(c not in "TFB" for c in cells):
            raise ValueError("board cells must be T, F, or B")
        self.cells = cells

    def __repr__(self) -> str:
        return f"TFBoard({self.cells!r})"


_TF_MEMO: dict = {}


def toads_frogs_game(board) -> Game:
    """The game of a Toads & Frogs board.

    A toad slides one cell right into a blank (no points) or jumps an
    adjacent frog into the blank square beyond it for one point; frogs do
    the same leftward, scoring for Right.  The jumped piece stays on the
    board.  Score at each node is 0; jump points enter as +1/-1 shifts of
    the subtree.
    """
    if not isinstance(board, TFBoard):
        board = TFBoard(board)
    return _tf_game(board.cells)


def _tf_game(cells: str) -> Game:
    cached = _TF_MEMO.get(cells)
    if cached is not None:
        return cached
    lefts = []
    rights = []
    for i, piece in enumerate(cells):
        if piece == "T":
            if i + 1 < len(cells) and cells[i + 1] == "B":
                lefts.append(_tf_game(_tf_move(cells, i, i + 1)))
            elif (i + 2 < len(cells) and cells[i + 1] == "F"
                  and cells[i + 2] == "B"):
                lefts.append(shift(_tf_game(_tf_move(cells, i, i + 2)), 1))
        elif piece == "F":
            if i - 1 >= 0 and cells[i - 1] == "B":
                rights.append(_tf_game(_tf_move(cells, i, i - 1)))
            elif (i - 2 >= 0 and cells[i - 1] == "T"
                  and cells[i - 2] == "B"):
                rights.append(shift(_tf_game(_tf_move(cells, i, i - 2)), -1))
    g = make_game(lefts, 0, rights)
    _TF_MEMO[cells] = g
    return g


def _tf_move(cells: str, src: int, dst: int) -> str:
    out = list(cells)
    out[dst] = out[src]
    out[src] = "B"
    return "".join(out)


class EdgeColor(enum.Enum):
    BLUE = "B"
    RED = "R"


def _as_color(c) -> EdgeColor:
    if isinstance(c, EdgeColor):
        return c
    if isinstance(c, str):
        u = c.strip().upper()
        if u in ("B", "BLUE"):
            return EdgeColor.BLUE
        if u in ("R", "RED"):
            return EdgeColor.RED
    raise ValueError(f"edge color must be BLUE or RED, got {c!r}")


class HackGraph:
    """A scoring Hackenbush position.

    Edges are (u, v, color) with color BLUE (Left's) or RED (Right's);
    grounded vertices anchor the graph.  variant picks the point rule:
    1 = a point per edge removed on your turn (cut plus fallen),
    2 = a point per removed edge of your own color,
    3 = own-color removed edges score +1 and opponent's -1.
    split_op says how disconnected parts are played once the position
    splits into several ground-connected components.
    """

    __slots__ = ("vertices", "edges", "grounded", "variant", "split_op",
                 "_memo", "_adjacent")

    def __init__(self, vertices: Iterable, edges: Iterable[tuple],
                 grounded: Iterable, variant: int = 1,
                 split_op: Operator = Operator.DISJUNCTIVE):
        self.vertices = frozenset(vertices)
        parsed = []
        for u, v, color in edges:
            parsed.append((u, v, _as_color(color)))
        self.edges = tuple(parsed)
        self.grounded = frozenset(grounded)
        if len(self.edges) > MAX_HACK_EDGES:
            raise ValueError(f"graphs are capped at {MAX_HACK_EDGES} edges")
        if variant not in (1, 2, 3):
            raise ValueError("variant must be 1, 2, or 3")
        for u, v, _ in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u!r}, {v!r}) uses unknown vertices")
        if not self.grounded <= self.vertices:
            raise ValueError("grounded vertices must be vertices")
        if self.edges and not self.grounded:
            raise ValueError("a graph with edges needs a grounded vertex")
        if not isinstance(split_op, Operator):
            raise TypeError("split_op must be an Operator")
        self.variant = variant
        self.split_op = split_op
        self._memo = {}
        self._adjacent = None

    def __repr__(self) -> str:
        return (f"HackGraph({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, variant {self.variant})")


def _supported(graph: HackGraph, alive: frozenset) -> frozenset:
    """Edges of the alive set still connected to a grounded vertex."""
    reach = set(graph.grounded)
    frontier = list(reach)
    incident = {}
    for i in alive:
        u, v, _ = graph.edges[i]
        incident.setdefault(u, []).append((i, v))
        incident.setdefault(v, []).append((i, u))
    while frontier:
        w = frontier.pop()
        for i, other in incident.get(w, ()):
            if other not in reach:
                reach.add(other)
                frontier.append(other)
    return frozenset(i for i in alive
                     if graph.edges[i][0] in reach or graph.edges[i][1] in reach)


def _components(graph: HackGraph, alive: frozenset) -> list:
    """Ground-connected components of the alive edges, as frozensets of
    edge indices, ordered by smallest member index.

    Edges belong together when they share a non-grounded vertex; grounded
    vertices never merge components (the ground is not a connector).
    """
    parent = {i: i for i in alive}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    by_vertex = {}
    for i in alive:
        u, v, _ = graph.edges[i]
        for w in (u, v):
            if w in graph.grounded:
                continue
            if w in by_vertex:
                ra, rb = find(by_vertex[w]), find(i)
                if ra != rb:
                    parent[rb] = ra
            else:
                by_vertex[w] = i
    groups = {}
    for i in alive:
        groups.setdefault(find(i), set()).add(i)
    return [frozenset(g) for g in
            sorted(groups.values(), key=lambda g: min(g))]


def _move_points(graph: HackGraph, removed: Iterable[int],
                 mover: EdgeColor) -> int:
    variant = graph.variant
    if variant == 1:
        return sum(1 for _ in removed)
    pts = 0
    for i in removed:
        color = graph.edges[i][2]
        if color is mover:
            pts += 1
        elif variant == 3:
            pts -= 1
    return pts


def hackenbush_game(graph: HackGraph) -> Game:
    """The game of a Hackenbush position.

    Left deletes a blue edge, Right a red one; every edge thereby cut off
    from the ground falls with it.  The mover's points for the turn (per
    the graph's variant) shift the subtree, positive for Left and negative
    for Right.  When a deletion splits the survivors into several
    ground-connected components, the components' games are combined under
    the graph's split operator.
    """
    alive = _supported(graph, frozenset(range(len(graph.edges))))
    return _hack_state(graph, alive)


def _hack_state(graph: HackGraph, alive: frozenset) -> Game:
    cached = graph._memo.get(alive)
    if cached is not None:
        return cached
    parts = _components(graph, alive)
    if len(parts) > 1:
        g = n_ary(graph.split_op, [_hack_component(graph, p) for p in parts])
    elif parts:
        g = _hack_component(graph, parts[0])
    else:
        g = atom(0)
    graph._memo[alive] = g
    return g


def _hack_component(graph: HackGraph, alive: frozenset) -> Game:
    cached = graph._memo.get(alive)
    if cached is not None:
        return cached
    lefts = []
    rights = []
    for i in sorted(alive):
        _, _, color = graph.edges[i]
        rest = _supported(graph, alive - {i})
        removed = alive - rest
        pts = _move_points(graph, removed, color)
        child = _hack_state(graph, rest)
        if color is EdgeColor.BLUE:
            lefts.append(shift(child, pts))
        else:
            rights.append(shift(child, -pts))
    g = make_game(lefts, 0, rights)
    graph._memo[alive] = g
    return g


def load_hack_file(path, variant: int = 1,
                   split_op: Operator = Operator.DISJUNCTIVE) -> HackGraph:
    """Read a graph from a text file of `ground <v>` and `edge <u> <v> <B|R>`
    lines (blank lines and #-comments ignored)."""
    grounded = set()
    edges = []
    vertices = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "ground" and len(parts) == 2:
                grounded.add(parts[1])
                vertices.add(parts[1])
            elif parts[0] == "edge" and len(parts) == 4:
                edges.append((parts[1], parts[2], parts[3]))
                vertices.update(parts[1:3])
            else:
                raise ValueError(f"{path}:{lineno}: cannot parse {raw.rstrip()!r}")
    return HackGraph(vertices, edges, grounded, variant=variant,
                     split_op=split_op)


def octal_to_game(position: HeapPosition, op: Operator) -> Game:
    """The explicit game tree of an octal heap position under an operator.

    final_score_left of the result equals gs(position, op); positions are
    capped by total bean count because the tree grows exponentially.
    """
    if position.total_beans() > ORACLE_BEAN_CAP:
        raise ValueError(f"positions are capped at {ORACLE_BEAN_CAP} beans")
    if op is Operator.SEQUENTIAL:
        for _, ruleset in position.heaps:
            if not ruleset.taking_no_breaking():
                raise ValueError("sequential play needs all digits <= 3")
    return _octal_position_game(position.heaps, op)
