"""Assembly graphs induced by double occurrence words, and polygonal paths.

A word w of length 2n induces a graph whose vertices are the letters of w
and whose transversal edges are e_i = (w[i], w[i+1]) for i = 1..2n-1.  Two
virtual edges e_0 and e_2n hang off w[1] and w[2n]; they complete the
incidence picture (every vertex sees exactly four edge ends) but can never
be selected by any enumeration.

Each vertex is rigid: the transversal passes straight through it twice, once
per visit.  At a vertex whose occurrences sit at positions i < j the two
straight-through pairs are {e_(i-1), e_i} and {e_(j-1), e_j}; every other
pair of incident edges meets at a corner and is called a neighbor pair.
Polygonal paths are the simple paths that turn a corner at every interior
vertex, i.e. consecutive edges are always neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, NotIncidentError
from .words import Dow, occurrences, render

__all__ = [
    "AssemblyGraph",
    "PolygonalPath",
    "build_graph",
    "are_neighbors",
    "is_polygonal",
    "to_dot",
]


@dataclass(frozen=True, eq=False)
class AssemblyGraph:
    """Incidence data derived from a word; build with :func:`build_graph`."""

    word: Dow
    # vertex -> its two straight-through pairs, each a frozenset of edge indices
    straight_through: dict[int, tuple[frozenset[int], frozenset[int]]]
    # vertex -> all incident edge indices, virtual ones included
    incident: dict[int, frozenset[int]]
    # per real edge e_i (slot i-1): endpoints as 0-based vertex slots, for
    # tight loops that should not hash letters
    edge_slots: tuple[tuple[int, int], ...]
    # sorted vertex letters; slot of letter v is vertex_slot[v]
    vertices: tuple[int, ...]
    vertex_slot: dict[int, int]

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def num_real_edges(self) -> int:
        return 2 * self.word.n - 1

    def edge_ends(self, i: int) -> tuple[int, int]:
        """Endpoints of real edge e_i, 1 <= i <= 2n-1, in word order."""
        if not 1 <= i <= self.num_real_edges:
            raise InputError(f"edge index {i} outside 1..{self.num_real_edges}")
        return self.word.letters[i - 1], self.word.letters[i]

    def real_edges_at(self, v: int) -> tuple[int, ...]:
        """Incident real edge indices at v, ascending; a loop appears once."""
        return tuple(sorted(i for i in self.incident[v] if 1 <= i <= self.num_real_edges))


def build_graph(word: Dow) -> AssemblyGraph:
    """Assemble the incidence structures for ``word``."""
    occ = occurrences(word)
    two_n = len(word.letters)
    straight: dict[int, tuple[frozenset[int], frozenset[int]]] = {}
    incident: dict[int, frozenset[int]] = {}
    for v in word.alphabet:
        i, j = occ[v]
        straight[v] = (frozenset((i - 1, i)), frozenset((j - 1, j)))
        incident[v] = frozenset((i - 1, i, j - 1, j))
    verts = tuple(sorted(word.alphabet))
    slot = {v: k for k, v in enumerate(verts)}
    edge_slots = tuple(
        (slot[word.letters[i - 1]], slot[word.letters[i]]) for i in range(1, two_n)
    )
    return AssemblyGraph(
        word=word,
        straight_through=straight,
        incident=incident,
        edge_slots=edge_slots,
        vertices=verts,
        vertex_slot=slot,
    )


def are_neighbors(graph: AssemblyGraph, v: int, a: int, b: int) -> bool:
    """Do edges a and b meet at a corner of vertex v?

    False exactly when {a, b} is one of the two straight-through pairs at v.
    Both edges must be incident to v; virtual indices 0 and 2n are legal
    arguments since they participate in straight-through pairs.
    """
    if v not in graph.straight_through:
        raise NotIncidentError(f"{v} is not a vertex of this graph")
    if a == b:
        raise InputError("edges must be distinct")
    here = graph.incident[v]
    if a not in here:
        raise NotIncidentError(f"edge e_{a} is not incident to vertex {v}")
    if b not in here:
        raise NotIncidentError(f"edge e_{b} is not incident to vertex {v}")
    return frozenset((a, b)) not in graph.straight_through[v]


@dataclass(frozen=True)
class PolygonalPath:
    """A candidate path: vertices v_0..v_k and the edge chosen at each step.

    Stored direction-normalized so that a path and its reversal compare and
    hash equal.  Shape constraints (edge count, non-emptiness) are enforced
    here; graph-relative validity is the job of :func:`is_polygonal`.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InputError("a path needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise InputError("a path on k+1 vertices needs exactly k edges")
        flipped = (self.vertices[::-1], self.edges[::-1])
        if flipped < (self.vertices, self.edges):
            object.__setattr__(self, "vertices", flipped[0])
            object.__setattr__(self, "edges", flipped[1])

    def is_singleton(self) -> bool:
        return len(self.vertices) == 1


def is_polygonal(graph: AssemblyGraph, path: PolygonalPath) -> bool:
    """Check a path against the graph: distinct vertices, real incident
    edges, and a corner turn at every interior vertex.

    Singletons are polygonal.  Anything revisiting a vertex is not, which
    also rules out loops and closed walks.
    """
    vs, es = path.vertices, path.edges
    if any(v not in graph.vertex_slot for v in vs):
        return False
    if len(set(vs)) != len(vs):
        return False
    for t, e in enumerate(es):
        if not 1 <= e <= graph.num_real_edges:
            return False
        if set(graph.edge_ends(e)) != {vs[t], vs[t + 1]}:
            return False
    for t in range(len(es) - 1):
        if not are_neighbors(graph, vs[t + 1], es[t], es[t + 1]):
            return False
    return True


def to_dot(graph: AssemblyGraph) -> str:
    """Render the graph, virtual edges included, as deterministic DOT text.

    Vertices become nodes v<letter> in ascending letter order, the two
    transversal endpoints become point-shaped nodes, and every edge carries
    its index as a label.  Each vertex node also records its two
    straight-through pairs, so the rigid structure survives the export.
    """
    w = graph.word.letters
    two_n = len(w)
    lines = ["graph assembly {", f'  label="{render(graph.word)}";']
    lines.append("  start [shape=point];")
    lines.append("  end [shape=point];")
    def fmt(pair: frozenset[int]) -> str:
        return "(" + ",".join(f"e{i}" for i in sorted(pair)) + ")"

    for v in graph.vertices:
        p, q = graph.straight_through[v]
        lines.append(f'  v{v} [label="{v}", straight_through="{fmt(p)},{fmt(q)}"];')
    lines.append(f'  start -- v{w[0]} [label="e0"];')
    for i in range(1, two_n):
        lines.append(f'  v{w[i - 1]} -- v{w[i]} [label="e{i}"];')
    lines.append(f'  v{w[-1]} -- end [label="e{two_n}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
