"""Deciding whether a word attains the Hamiltonian-set bound.

A word with n letters can have at most F_(2n+1) - 1 Hamiltonian sets, and
the words reaching that bound are exactly the ones for which no proper,
non-empty letter subset leaves only even-length pieces behind when deleted.
This module implements that parity test, its graph-side twin (an edge set
whose endpoints all pair up), and the constructive machinery around
non-maximal words: greedy extraction of a framing cord, the recursive
even-split construction that the cord supports, and the minimal even split,
whose projection is always a tangled cord.

Everything here re-verifies its own output and raises
:class:`~dowgraph.errors.InternalCheckError` on any discrepancy, so a green
run really is a machine check of the underlying identities.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalCheckError, PreconditionViolatedError
from .graphs import AssemblyGraph, build_graph
from .hamiltonian import count_hamiltonian_sets, fibonacci, nonconsecutive_masks
from .words import (
    Dow,
    canonicalize,
    delete_letters,
    is_tangled_cord,
    occurrences,
    project,
    render,
    split_composition,
)

__all__ = [
    "DEFAULT_CROSS_CHECK_LIMIT",
    "EvenSplit",
    "MaximalityReport",
    "even_split_witness",
    "paired_endpoints_witness",
    "cord_pattern",
    "is_framing_cord",
    "find_framing_cord",
    "even_split_from_cord",
    "minimal_even_split",
    "analyze",
]

DEFAULT_CROSS_CHECK_LIMIT = 10


def _gaps_all_even(positions: Sequence[int], total: int) -> bool:
    # positions are the sorted occurrence slots of the deleted letters; the
    # surviving runs are the gaps before, between, and after them
    prev = 0
    for p in positions:
        if (p - prev - 1) % 2:
            return False
        prev = p
    return (total - prev) % 2 == 0


def even_split_witness(word: Dow) -> frozenset[int] | None:
    """Smallest letter subset whose deletion leaves only even pieces.

    Scans proper non-empty subsets by ascending size, then lexicographically,
    so the returned witness is deterministic.  None means every deletion
    leaves some odd piece, which is exactly the bound-attaining case.
    """
    occ = occurrences(word).pairs
    letters = sorted(word.alphabet)
    total = len(word.letters)
    for size in range(1, len(letters)):
        for sigma in combinations(letters, size):
            positions = sorted(p for a in sigma for p in occ[a])
            if _gaps_all_even(positions, total):
                return frozenset(sigma)
    return None


def paired_endpoints_witness(graph: AssemblyGraph) -> int | None:
    """Graph-side twin of :func:`even_split_witness`.

    Looks for up to n-1 pairwise non-consecutive transversal edges whose
    endpoint list mentions no vertex exactly once; such a selection can
    never be a union of vertex-disjoint polygonal paths.  Returns the first
    witness in ascending mask order, or None.
    """
    n = graph.n
    for mask in nonconsecutive_masks(graph.num_real_edges):
        k = mask.bit_count()
        if not 1 <= k <= n - 1:
            continue
        counts: dict[int, int] = {}
        m = mask
        while m:
            low = m & -m
            m ^= low
            u, v = graph.edge_ends(low.bit_length())
            counts[u] = counts.get(u, 0) + 1
            counts[v] = counts.get(v, 0) + 1
        if all(c != 1 for c in counts.values()):
            return mask
    return None


def cord_pattern(cord: Sequence[int]) -> tuple[int, ...]:
    """The projection a framing cord t_1..t_s must produce:
    t_1 t_2 t_1 t_3 t_2 ... t_s t_(s-1) t_s."""
    s = len(cord)
    if s == 0:
        raise PreconditionViolatedError("a cord needs at least one letter")
    if s == 1:
        return (cord[0], cord[0])
    out = [cord[0], cord[1], cord[0]]
    for k in range(2, s):
        out.extend((cord[k], cord[k - 1]))
    out.append(cord[-1])
    return tuple(out)


def is_framing_cord(word: Dow, cord: Sequence[int]) -> bool:
    """Does the ordered letter sequence frame the word?

    Requires the first cord letter to open the word, the last to close it,
    and the projection onto the cord letters to interlock in the tangled
    pattern.
    """
    cord = tuple(cord)
    if not cord or len(set(cord)) != len(cord):
        return False
    if not set(cord) <= word.alphabet:
        return False
    if word.letters[0] != cord[0] or word.letters[-1] != cord[-1]:
        return False
    return project(word, set(cord)).content == cord_pattern(cord)


def find_framing_cord(word: Dow) -> tuple[int, ...] | None:
    """Greedily extract a framing cord, or None when the word splits.

    Starts from the opening letter and repeatedly picks, among letters that
    straddle the current right end, the one reaching furthest.  The greedy
    run gets stuck before the end of the word exactly when some proper
    prefix is a complete word of its own.
    """
    occ = occurrences(word).pairs
    total = len(word.letters)
    first = word.letters[0]
    cord = [first]
    end = occ[first][1]
    while end < total:
        best = None
        for a, (o1, o2) in occ.items():
            if o1 < end < o2 and (best is None or o2 > occ[best][1]):
                best = a
        if best is None:
            return None
        cord.append(best)
        end = occ[best][1]
    result = tuple(cord)
    if not is_framing_cord(word, result):
        raise InternalCheckError(
            f"greedy cord {result} fails the framing check on {render(word)}"
        )
    return result


def _cord_occurrences(letters: Sequence[int], cord: Sequence[int]) -> dict[int, list[int]]:
    wanted = set(cord)
    occ: dict[int, list[int]] = {a: [] for a in cord}
    for pos, a in enumerate(letters, start=1):
        if a in wanted:
            occ[a].append(pos)
    return occ


def _even_split_rec(letters: tuple[int, ...], cord: tuple[int, ...]) -> frozenset[int]:
    s = len(cord)
    if s == 1:
        return frozenset(cord)
    occ = _cord_occurrences(letters, cord)
    # first try to cut the word at an even-positioned second occurrence of a
    # non-final cord letter; the prefix inherits a shorter framing cord
    for i in range(s - 1):
        o2 = occ[cord[i]][1]
        if o2 % 2 == 0:
            return _even_split_rec(letters[:o2], cord[: i + 1])
    # otherwise an odd-positioned first occurrence flips into the case above
    # after reversal, which keeps both the letters and the split parities
    for j in range(1, s):
        if occ[cord[j]][0] % 2 == 1:
            return _even_split_rec(letters[::-1], cord[::-1])
    # no cut available: the whole cord works
    return frozenset(cord)


def even_split_from_cord(letters: Sequence[int], cord: Sequence[int]) -> frozenset[int]:
    """Build a letter set with an all-even split from a framing cord.

    ``letters`` may be any even-length sequence in which every symbol shows
    up at most twice; recursion on prefixes needs that generality.  The word
    must be strictly longer than twice the cord, otherwise deleting anything
    cannot leave non-trivial even pieces and the call is refused.
    """
    letters = tuple(letters)
    cord = tuple(cord)
    s = len(cord)
    if len(letters) % 2:
        raise PreconditionViolatedError("the word must have even length")
    if len(letters) == 2 * s:
        raise PreconditionViolatedError(
            "the word is nothing but its cord; no even split exists"
        )
    if len(letters) < 2 * s:
        raise PreconditionViolatedError("the cord does not fit the word")
    occ = _cord_occurrences(letters, cord)
    if any(len(ps) != 2 for ps in occ.values()):
        raise PreconditionViolatedError("every cord letter must occur exactly twice")
    if letters[0] != cord[0] or letters[-1] != cord[-1]:
        raise PreconditionViolatedError("the cord must open and close the word")
    flat = tuple(a for a in letters if a in set(cord))
    if flat != cord_pattern(cord):
        raise PreconditionViolatedError("the cord letters do not interlock as a cord")
    sigma = _even_split_rec(letters, cord)
    if not delete_letters(letters, sigma).all_even():
        raise InternalCheckError(
            f"constructed split {sorted(sigma)} leaves an odd piece"
        )
    return sigma


def minimal_even_split(word: Dow) -> tuple[frozenset[int], Dow] | None:
    """The smallest all-even deletion witness and its projection.

    None exactly when the word attains the bound.  When present, the
    projection is checked to be a tangled cord; that identity is the point
    of the whole construction, so its failure is an internal error.
    """
    sigma = even_split_witness(word)
    if sigma is None:
        return None
    projection = project(word, sigma).to_dow()
    if not is_tangled_cord(projection):
        raise InternalCheckError(
            f"minimal split {sorted(sigma)} of {render(word)} projects to "
            f"{render(projection)}, which is not a tangled cord"
        )
    return sigma, projection


@dataclass(frozen=True)
class EvenSplit:
    """A witness subset, its projection, and the verified cord flag."""

    sigma: frozenset[int]
    projection: Dow
    is_tangled_cord: bool

    def to_json_dict(self) -> dict:
        return {
            "sigma": sorted(self.sigma),
            "projection": render(self.projection),
            "is_tangled_cord": self.is_tangled_cord,
        }


@dataclass(frozen=True)
class MaximalityReport:
    """Everything this package can say about one word.

    ``word`` is the canonical form of the analyzed word, and all letters
    mentioned elsewhere in the report refer to that relabeling.  ``count``
    is None when n exceeded the cross-check limit and enumeration was
    skipped.
    """

    word: Dow
    n: int
    count: int | None
    bound: int
    is_maximal: bool
    failing_sigma: frozenset[int] | None
    is_composition: bool
    framing_cord: tuple[int, ...] | None
    minimal_even_split: EvenSplit | None

    @property
    def consistent(self) -> bool:
        """Does the enumerated count agree with the parity verdict?"""
        if self.count is None:
            return True
        return (self.count == self.bound) == self.is_maximal

    def to_json_dict(self) -> dict:
        return {
            "word": render(self.word),
            "n": self.n,
            "count": self.count,
            "bound": self.bound,
            "is_maximal": self.is_maximal,
            "failing_sigma": sorted(self.failing_sigma)
            if self.failing_sigma is not None
            else None,
            "is_composition": self.is_composition,
            "framing_cord": list(self.framing_cord)
            if self.framing_cord is not None
            else None,
            "minimal_even_split": self.minimal_even_split.to_json_dict()
            if self.minimal_even_split is not None
            else None,
        }


def analyze(word: Dow, cross_check_limit: int = DEFAULT_CROSS_CHECK_LIMIT) -> MaximalityReport:
    """Full maximality report for one word.

    The verdict comes from the parity test.  For words within the
    cross-check limit the Hamiltonian sets are also counted outright, and
    the report's ``consistent`` property compares the two; callers that want
    a hard failure on disagreement should check it.
    """
    canonical = canonicalize(word)
    n = canonical.n
    bound = fibonacci(2 * n + 1) - 1
    witness = even_split_witness(canonical)
    count = None
    if n <= cross_check_limit:
        count = count_hamiltonian_sets(build_graph(canonical))
    composition = split_composition(canonical)
    cord = find_framing_cord(canonical)
    if (cord is None) != (composition is not None):
        raise InternalCheckError(
            f"cord extraction and composition split disagree on {render(canonical)}"
        )
    split = None
    if witness is not None:
        projection = project(canonical, witness).to_dow()
        if not is_tangled_cord(projection):
            raise InternalCheckError(
                f"minimal split of {render(canonical)} does not project to a cord"
            )
        split = EvenSplit(
            sigma=witness, projection=projection, is_tangled_cord=True
        )
    return MaximalityReport(
        word=canonical,
        n=n,
        count=count,
        bound=bound,
        is_maximal=witness is None,
        failing_sigma=witness,
        is_composition=composition is not None,
        framing_cord=cord,
        minimal_even_split=split,
    )
