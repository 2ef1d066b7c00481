"""Exact enumeration of Hamiltonian sets of polygonal paths.

A Hamiltonian set of a graph is a collection of vertex-disjoint polygonal
paths, singletons allowed, that together visit every vertex.  Each such set
is fingerprinted by the bitmask of transversal edges it uses: bit i-1 of the
mask stands for edge e_i, so masks range over 2n-1 bits.

Three facts drive the algorithms here.  The fingerprint map is injective, no
fingerprint contains two adjacent ones (consecutive edges meet straight
through, never at a corner), and the all-alternating mask 1010...1 is never
hit.  Enumeration therefore only needs to scan the Fibonacci-many masks
without adjacent ones and keep those whose edges induce disjoint paths,
which this module checks with a tiny union-find.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ConsecutiveEdgesError,
    InvalidHamiltonianSetError,
    TooLargeError,
)
from .graphs import AssemblyGraph, PolygonalPath, are_neighbors, is_polygonal

__all__ = [
    "HamiltonianSet",
    "fibonacci",
    "nonconsecutive_masks",
    "alternating_mask",
    "mask_to_bits",
    "edge_mask",
    "hamiltonian_set_from_mask",
    "is_hamiltonian_set",
    "count_hamiltonian_sets",
    "enumerate_hamiltonian_sets",
    "brute_force_hamiltonian_sets",
    "format_hamiltonian_set",
]

BRUTE_FORCE_LIMIT = 8


@dataclass(frozen=True)
class HamiltonianSet:
    """A vertex-disjoint cover of all vertices by polygonal paths."""

    paths: frozenset[PolygonalPath]

    def total_edges(self) -> int:
        return sum(len(p.edges) for p in self.paths)

    def sorted_paths(self) -> tuple[PolygonalPath, ...]:
        return tuple(sorted(self.paths, key=lambda p: (p.vertices, p.edges)))


def fibonacci(k: int) -> int:
    """F_k with F_0 = 0 and F_1 = 1.

    >>> [fibonacci(k) for k in range(8)]
    [0, 1, 1, 2, 3, 5, 8, 13]
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@lru_cache(maxsize=32)
def nonconsecutive_masks(num_bits: int) -> tuple[int, ...]:
    """All masks on ``num_bits`` bits with no two adjacent ones, ascending.

    There are F_(num_bits + 2) of them: the masks on k bits are the masks on
    k-1 bits plus the masks on k-2 bits with bit k-1 set.
    """
    if num_bits < 0:
        raise ValueError("num_bits must be non-negative")
    older: list[int] = [0]
    newer: list[int] = [0, 1]
    if num_bits == 0:
        return (0,)
    for k in range(2, num_bits + 1):
        top = 1 << (k - 1)
        older, newer = newer, newer + [top | x for x in older]
    return tuple(newer)


def alternating_mask(n: int) -> int:
    """The mask selecting e_1, e_3, ..., e_(2n-1); the one value the

    fingerprint map can never take, since those n edges chain every vertex
    into closed runs."""
    return sum(1 << k for k in range(0, 2 * n - 1, 2))


def mask_to_bits(mask: int, num_edges: int) -> str:
    """Render a mask as a 0/1 string, edge e_1 leftmost.

    >>> mask_to_bits(0b10010, 5)
    '01001'
    """
    return "".join("1" if mask >> k & 1 else "0" for k in range(num_edges))


def is_hamiltonian_set(graph: AssemblyGraph, candidate: HamiltonianSet) -> bool:
    """Polygonal paths, pairwise vertex-disjoint, covering every vertex."""
    seen: set[int] = set()
    for path in candidate.paths:
        if not is_polygonal(graph, path):
            return False
        for v in path.vertices:
            if v in seen:
                return False
            seen.add(v)
    return seen == set(graph.vertices)


def edge_mask(graph: AssemblyGraph, hamset: HamiltonianSet) -> int:
    """Fingerprint a Hamiltonian set as its used-edge bitmask."""
    if not is_hamiltonian_set(graph, hamset):
        raise InvalidHamiltonianSetError("not a Hamiltonian set of this graph")
    mask = 0
    for path in hamset.paths:
        for e in path.edges:
            mask |= 1 << (e - 1)
    return mask


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _selects_disjoint_paths(graph: AssemblyGraph, mask: int) -> bool:
    """Does the mask's edge set induce vertex-disjoint simple paths?

    Rejects loops, any vertex of induced degree three, and cycles, the
    parallel two-edge kind included.  Assumes the mask has no two adjacent
    bits, which already guarantees corner turns at shared vertices.
    """
    size = graph.n
    parent = list(range(size))
    degree = [0] * size
    slots = graph.edge_slots
    while mask:
        low = mask & -mask
        mask ^= low
        u, v = slots[low.bit_length() - 1]
        if u == v:
            return False
        if degree[u] == 2 or degree[v] == 2:
            return False
        degree[u] += 1
        degree[v] += 1
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def hamiltonian_set_from_mask(graph: AssemblyGraph, mask: int) -> HamiltonianSet | None:
    """Decode a mask back into its Hamiltonian set, or None.

    None means the selected edges do not induce vertex-disjoint paths.  A
    mask with two adjacent bits is rejected outright because two consecutive
    edges can only continue straight through their shared vertex.
    """
    if mask & (mask << 1):
        raise ConsecutiveEdgesError("mask selects two consecutively indexed edges")
    if mask >> graph.num_real_edges:
        raise ConsecutiveEdgesError(
            f"mask has bits beyond edge e_{graph.num_real_edges}"
        )
    if not _selects_disjoint_paths(graph, mask):
        return None

    adjacency: dict[int, list[tuple[int, int]]] = {}
    m = mask
    while m:
        low = m & -m
        m ^= low
        e = low.bit_length()
        u, v = graph.edge_ends(e)
        adjacency.setdefault(u, []).append((e, v))
        adjacency.setdefault(v, []).append((e, u))

    paths: list[PolygonalPath] = []
    visited: set[int] = set()
    for start in sorted(adjacency):
        if start in visited or len(adjacency[start]) != 1:
            continue
        vs = [start]
        es: list[int] = []
        visited.add(start)
        while True:
            nxt = [(e, o) for e, o in adjacency[vs[-1]] if not es or e != es[-1]]
            if not nxt:
                break
            e, other = nxt[0]
            es.append(e)
            vs.append(other)
            visited.add(other)
        paths.append(PolygonalPath(tuple(vs), tuple(es)))
    for v in graph.vertices:
        if v not in adjacency:
            paths.append(PolygonalPath((v,), ()))
    return HamiltonianSet(frozenset(paths))


def count_hamiltonian_sets(graph: AssemblyGraph) -> int:
    """How many Hamiltonian sets the graph has.

    Scans only the Fibonacci-many masks without adjacent ones; the count is
    bounded by F_(2n+1), and equality never occurs because the alternating
    mask always fails.
    """
    return sum(
        1
        for mask in nonconsecutive_masks(graph.num_real_edges)
        if _selects_disjoint_paths(graph, mask)
    )


def enumerate_hamiltonian_sets(graph: AssemblyGraph) -> list[HamiltonianSet]:
    """All Hamiltonian sets, in ascending fingerprint order."""
    out = []
    for mask in nonconsecutive_masks(graph.num_real_edges):
        hamset = hamiltonian_set_from_mask(graph, mask)
        if hamset is not None:
            out.append(hamset)
    return out


def _all_polygonal_paths(graph: AssemblyGraph) -> list[PolygonalPath]:
    """Every polygonal path with at least one edge, by exhaustive extension."""
    found: set[PolygonalPath] = set()

    def extend(vs: list[int], es: list[int]) -> None:
        u = vs[-1]
        for e in graph.real_edges_at(u):
            x, y = graph.edge_ends(e)
            other = y if x == u else x
            if other in vs:
                continue
            if es and not are_neighbors(graph, u, es[-1], e):
                continue
            vs.append(other)
            es.append(e)
            candidate = PolygonalPath(tuple(vs), tuple(es))
            if is_polygonal(graph, candidate):
                found.add(candidate)
            extend(vs, es)
            vs.pop()
            es.pop()

    for v in graph.vertices:
        extend([v], [])
    return sorted(found, key=lambda p: (p.vertices, p.edges))


def brute_force_hamiltonian_sets(graph: AssemblyGraph) -> list[HamiltonianSet]:
    """Independent reference enumeration, no fingerprints involved.

    Builds every polygonal path by vertex-by-vertex extension, then covers
    the vertex set exactly.  Exponential and proud of it; refuses graphs
    beyond n = 8 so nobody leans on it by accident.
    """
    if graph.n > BRUTE_FORCE_LIMIT:
        raise TooLargeError(
            f"brute force reference enumeration is capped at n = {BRUTE_FORCE_LIMIT}"
        )
    paths = _all_polygonal_paths(graph)
    by_vertex: dict[int, list[PolygonalPath]] = {v: [] for v in graph.vertices}
    for p in paths:
        for v in p.vertices:
            by_vertex[v].append(p)

    out: list[HamiltonianSet] = []
    chosen: list[PolygonalPath] = []

    def cover(uncovered: frozenset[int]) -> None:
        if not uncovered:
            out.append(HamiltonianSet(frozenset(chosen)))
            return
        v = min(uncovered)
        chosen.append(PolygonalPath((v,), ()))
        cover(uncovered - {v})
        chosen.pop()
        for p in by_vertex[v]:
            pv = frozenset(p.vertices)
            if pv <= uncovered:
                chosen.append(p)
                cover(uncovered - pv)
                chosen.pop()

    cover(frozenset(graph.vertices))
    return out


def format_hamiltonian_set(hamset: HamiltonianSet) -> str:
    """Bracketed vertex runs, e.g. ``[1-2-3][4]``."""
    return "".join(
        "[" + "-".join(str(v) for v in p.vertices) + "]" for p in hamset.sorted_paths()
    )
