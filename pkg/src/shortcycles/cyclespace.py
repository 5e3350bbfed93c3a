"""Cycles as edge sets, fundamental cycles of BFS trees and the candidate sets.

``C1`` holds the fundamental cycles of the BFS tree rooted at every vertex,
``C2`` the symmetric differences of two ``C1`` members that are again a
single simple cycle, and ``C`` their union.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .errors import EdgeInTree
from .graph import BfsTree, Graph, bfs_tree, tree_path


class FundamentalTag(NamedTuple):
    """The cycle is the fundamental cycle of ``edge`` in the BFS tree at ``root``."""

    root: int
    edge: int


class SumTag(NamedTuple):
    """The cycle is the sum of C1 members ``first`` and ``second`` (indices)."""

    first: int
    second: int


@dataclass(frozen=True)
class Cycle:
    edge_ids: tuple[int, ...]
    vertex_walk: tuple[int, ...]
    provenance: tuple = ()

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def mask(self) -> int:
        mask = 0
        for e in self.edge_ids:
            mask |= 1 << e
        return mask

    @property
    def sort_key(self):
        return (len(self.edge_ids), self.edge_ids)

    @property
    def in_c1(self) -> bool:
        return any(isinstance(tag, FundamentalTag) for tag in self.provenance)

    def with_provenance(self, tags) -> Cycle:
        return Cycle(self.edge_ids, self.vertex_walk, tuple(tags))


def symmetric_difference(a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    return frozenset(a) ^ frozenset(b)


def as_single_cycle(g: Graph, es: Iterable[int], provenance=()) -> Cycle | None:
    """The edge set as a ``Cycle`` if it is one simple cycle, else ``None``."""
    edges = sorted(set(es))
    if not edges:
        return None
    incident: dict[int, list[int]] = {}
    for e in edges:
        for v in g.edges[e]:
            incident.setdefault(v, []).append(e)
    if any(len(inc) != 2 for inc in incident.values()):
        return None
    if len(incident) != len(edges):
        return None

    start = min(incident)
    e0, e1 = incident[start]
    first = e0 if g.other(e0, start) < g.other(e1, start) else e1
    walk = [start]
    v, e = start, first
    while True:
        v = g.other(e, v)
        walk.append(v)
        if v == start:
            break
        a, b = incident[v]
        e = b if a == e else a
    if len(walk) - 1 != len(edges):
        # the walk closed before visiting every edge: several disjoint cycles
        return None
    return Cycle(tuple(edges), tuple(walk), tuple(provenance))


def fundamental_cycle(g: Graph, t: BfsTree, e: int) -> Cycle:
    if e in t.tree_edges:
        raise EdgeInTree(e)
    u, v = g.edges[e]
    es = set(tree_path(t, u)) ^ set(tree_path(t, v))
    es.add(e)
    cycle = as_single_cycle(g, es, (FundamentalTag(t.root, e),))
    assert cycle is not None, "fundamental cycle of a tree must be simple"
    return cycle


@dataclass(frozen=True)
class CandidateSet:
    """Deduplicated cycles ordered by ``(length, edge_ids)``."""

    cycles: tuple[Cycle, ...]
    origin: str
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c.edge_ids: c for c in self.cycles})

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __getitem__(self, i):
        return self.cycles[i]

    def __contains__(self, edge_ids):
        return tuple(sorted(edge_ids)) in self._index

    def get(self, edge_ids) -> Cycle | None:
        return self._index.get(tuple(sorted(edge_ids)))

    def keys(self) -> set[tuple[int, ...]]:
        return set(self._index)


def merge_cycles(cycles: Iterable[Cycle], origin: str) -> CandidateSet:
    """Dedup by edge set, union provenance, and sort canonically.

    The result does not depend on the order of ``cycles``.
    """
    by_key: dict[tuple[int, ...], tuple[Cycle, set]] = {}
    for c in cycles:
        if c.edge_ids in by_key:
            by_key[c.edge_ids][1].update(c.provenance)
        else:
            by_key[c.edge_ids] = (c, set(c.provenance))
    merged = [
        c.with_provenance(sorted(tags, key=_tag_key))
        for c, tags in by_key.values()
    ]
    merged.sort(key=lambda c: c.sort_key)
    return CandidateSet(tuple(merged), origin)


def _tag_key(tag):
    # fundamental tags sort before sum tags
    return (0 if isinstance(tag, FundamentalTag) else 1, tuple(tag))


def _resolve_threads(threads: int | None) -> int:
    if threads is None or threads < 1:
        return os.cpu_count() or 1
    return threads


def _root_cycles(g: Graph, root: int) -> list[Cycle]:
    t = bfs_tree(g, root)
    return [fundamental_cycle(g, t, e) for e in range(g.m) if e not in t.tree_edges]


def generate_c1(g: Graph, threads: int = 1) -> CandidateSet:
    """Fundamental cycles of the BFS trees rooted at every vertex.

    Before dedup there are ``n * (m - n + 1)`` of them.
    """
    roots = range(g.n)
    threads = _resolve_threads(threads)
    if threads == 1:
        per_root = [_root_cycles(g, r) for r in roots]
    else:
        with ThreadPoolExecutor(threads) as pool:
            per_root = list(pool.map(lambda r: _root_cycles(g, r), roots))
    return merge_cycles((c for cycles in per_root for c in cycles), "C1")


def _edge_matrix(g: Graph, cycles) -> np.ndarray:
    x = np.zeros((len(cycles), g.m), dtype=np.uint8)
    for i, c in enumerate(cycles):
        x[i, list(c.edge_ids)] = 1
    return x


def _incidence(g: Graph) -> np.ndarray:
    b = np.zeros((g.m, g.n), dtype=np.float32)
    for e, (u, v) in enumerate(g.edges):
        b[e, u] = b[e, v] = 1
    return b


def _scan_rows(x, b, vertex_sets, rows, shared_vertex_only):
    """Pairs ``(i, j)`` with ``i`` in ``rows`` and ``j > i`` whose sum has
    maximum degree 2. Such a sum is a disjoint union of simple cycles."""
    found = []
    for i in rows:
        others = np.arange(i + 1, x.shape[0])
        if shared_vertex_only:
            # vertex-disjoint cycles never sum to a single cycle
            keep = (vertex_sets[others] & vertex_sets[i]).any(axis=1)
            others = others[keep]
        if others.size == 0:
            continue
        sums = x[others] ^ x[i]
        degrees = sums.astype(np.float32) @ b
        ok = (degrees.max(axis=1) <= 2) & sums.any(axis=1)
        for j in others[ok]:
            found.append((i, int(j)))
    return found


def generate_c2(
    g: Graph, c1: CandidateSet, threads: int = 1, shared_vertex_only: bool = False
) -> CandidateSet:
    """Sums of two C1 members that form a single simple cycle.

    Every unordered pair is examined, including two cycles from the same
    tree, so the cost is ``O(|C1|^2 * m)``. ``shared_vertex_only`` skips pairs
    of vertex-disjoint cycles, which cannot sum to a single cycle.
    """
    k = len(c1)
    if k < 2:
        return CandidateSet((), "C2")
    x = _edge_matrix(g, c1.cycles)
    b = _incidence(g)
    vertex_sets = (x.astype(np.float32) @ b) > 0

    threads = _resolve_threads(threads)
    rows = list(range(k - 1))
    chunks = [rows[i::threads] for i in range(threads)] if threads > 1 else [rows]
    if len(chunks) == 1:
        results = [_scan_rows(x, b, vertex_sets, chunks[0], shared_vertex_only)]
    else:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(
                lambda rs: _scan_rows(x, b, vertex_sets, rs, shared_vertex_only), chunks
            ))

    pairs_by_key: dict[tuple[int, ...], list[SumTag]] = {}
    for pairs in results:
        for i, j in pairs:
            key = tuple(np.flatnonzero(x[i] ^ x[j]).tolist())
            pairs_by_key.setdefault(key, []).append(SumTag(i, j))
    cycles = []
    for key, tags in pairs_by_key.items():
        c = as_single_cycle(g, key, tags)
        if c is not None:
            cycles.append(c)
    return merge_cycles(cycles, "C2")


@dataclass(frozen=True)
class Candidates:
    c1: CandidateSet
    c2: CandidateSet
    c: CandidateSet

    @property
    def counts(self) -> dict[str, int]:
        return {"C1": len(self.c1), "C2": len(self.c2), "C": len(self.c)}


def build_candidates(g: Graph, threads: int = 1, shared_vertex_only: bool = False) -> Candidates:
    c1 = generate_c1(g, threads)
    c2 = generate_c2(g, c1, threads, shared_vertex_only)
    return Candidates(c1, c2, merge_cycles(list(c1) + list(c2), "C"))


def candidate_c(g: Graph, threads: int = 1) -> CandidateSet:
    return build_candidates(g, threads).c


generate_C1 = generate_c1
generate_C2 = generate_c2
candidate_C = candidate_c
