"""Shortest two-sided, even, odd and contractible cycles from the candidate set.

Each solver scans ``C = C1 | C2`` (see :mod:`shortcycles.cyclespace`),
which is guaranteed to hold the cycles these queries ask for, so no search
over all cycles of the graph is ever needed.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .cyclespace import Candidates, Cycle, build_candidates
from .embedding import EmbeddingScheme, Parity, euler_genus, mask_parity
from .errors import DisconnectedGraph, NotProjectivePlane
from .graph import Graph, distances, is_connected


class Query(enum.Enum):
    TWO_SIDED = "two_sided"
    EVEN = "even"
    ODD = "odd"
    GIRTH = "girth"
    CONTRACTIBLE_PROJECTIVE = "contractible_projective"


@dataclass
class SolverReport:
    query: Query
    result: object
    candidate_counts: dict[str, int]
    elapsed: float
    reason: str = ""
    scheme: EmbeddingScheme | None = field(default=None, repr=False)

    @property
    def absent(self) -> bool:
        return self.result is None or self.result == []


def _candidates(g: Graph, candidates: Candidates | None, threads: int) -> Candidates:
    if candidates is not None:
        return candidates
    if not is_connected(g):
        raise DisconnectedGraph()
    return build_candidates(g, threads)


def shortest_two_sided(
    g: Graph, s: EmbeddingScheme, candidates: Candidates | None = None, threads: int = 1
) -> Cycle | None:
    """Canonical shortest cycle with an even number of negative edges.

    ``None`` means the graph has no two-sided cycle at all.
    """
    cand = _candidates(g, candidates, threads)
    for c in cand.c:
        if mask_parity(s, c.mask) is Parity.TWO_SIDED:
            return c
    return None


def shortest_even_cycles(
    g: Graph, candidates: Candidates | None = None, threads: int = 1
) -> list[Cycle]:
    cand = _candidates(g, candidates, threads)
    even = [c for c in cand.c if c.is_even]
    if not even:
        return []
    best = even[0].length
    return [c for c in even if c.length == best]


def girth(g: Graph, candidates: Candidates | None = None, threads: int = 1) -> int | None:
    cand = _candidates(g, candidates, threads)
    return cand.c[0].length if len(cand.c) else None


def shortest_odd_cycles(
    g: Graph, candidates: Candidates | None = None, threads: int = 1
) -> list[Cycle] | None:
    """All shortest odd cycles, provided the girth is odd.

    Returns ``None`` when the girth is even or the graph is a tree; then the
    candidate set carries no completeness guarantee for odd cycles.
    """
    cand = _candidates(g, candidates, threads)
    length = girth(g, cand)
    if length is None or length % 2 == 0:
        return None
    return [c for c in cand.c1 if c.length == length]


def check_projective_plane(g: Graph, s: EmbeddingScheme) -> None:
    genus, orientable = euler_genus(g, s)
    if (genus, orientable) != (1, False):
        raise NotProjectivePlane(genus, orientable)


def shortest_contractible_projective(
    g: Graph, s: EmbeddingScheme, candidates: Candidates | None = None, threads: int = 1
) -> Cycle | None:
    """Shortest contractible cycle of a projective-plane embedding.

    On the projective plane a cycle is contractible exactly when it is
    two-sided, so this is the shortest two-sided cycle once the surface has
    been confirmed.
    """
    check_projective_plane(g, s)
    return shortest_two_sided(g, s, candidates, threads)


def is_isometric_cycle(g: Graph, c: Cycle) -> bool:
    """True iff distance along ``c`` equals graph distance for every vertex pair."""
    walk = c.vertex_walk[:-1]
    k = len(walk)
    for i, x in enumerate(walk):
        dist = distances(g, x)
        for j in range(i + 1, k):
            along = min(j - i, k - (j - i))
            if dist[walk[j]] < along:
                return False
    return True


def solve(
    query: Query | str,
    g: Graph,
    s: EmbeddingScheme | None = None,
    threads: int = 1,
) -> SolverReport:
    query = Query(query)
    start = time.perf_counter()
    if query is Query.CONTRACTIBLE_PROJECTIVE:
        # fail before paying for the candidate set
        check_projective_plane(g, s)
    cand = _candidates(g, None, threads)
    reason = ""
    if query is Query.TWO_SIDED:
        result = shortest_two_sided(g, s, cand)
        if result is None:
            reason = "every cycle of the graph is one-sided"
    elif query is Query.EVEN:
        result = shortest_even_cycles(g, cand)
        if not result:
            reason = "the graph has no even cycle"
    elif query is Query.ODD:
        result = shortest_odd_cycles(g, cand)
        if result is None:
            reason = (
                "the graph is acyclic" if girth(g, cand) is None
                else "the girth is even; shortest odd cycles are not certified"
            )
    elif query is Query.GIRTH:
        result = girth(g, cand)
        if result is None:
            reason = "the graph is acyclic"
    else:
        result = shortest_two_sided(g, s, cand)
        if result is None:
            reason = "every cycle is one-sided, hence noncontractible"
    elapsed = time.perf_counter() - start
    return SolverReport(query, result, cand.counts, elapsed, reason, s)
