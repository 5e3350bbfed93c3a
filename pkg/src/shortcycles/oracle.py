"""Brute-force ground truth and random instances for desk-scale checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cyclespace import Cycle, as_single_cycle
from .embedding import EmbeddingScheme, Parity, edge_set_parity, euler_genus, validate_scheme
from .errors import CycleCapExceeded, TooManyEdges
from .graph import Graph, build_graph

DEFAULT_CAP = 10**6


def enumerate_simple_cycles(g: Graph, cap: int = DEFAULT_CAP) -> list[Cycle]:
    """All simple cycles in canonical ``(length, edge_ids)`` order.

    A cycle is grown only from its smallest vertex ``s`` through larger
    vertices, and accepted in one direction only (second vertex smaller than
    the last), so each cycle is produced exactly once.
    """
    found = []
    on_path = [False] * g.n

    for s in range(g.n):
        path = [s]
        edges = []
        on_path[s] = True

        def extend(v):
            for w, e in g.adjacency[v]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        if len(found) >= cap:
                            raise CycleCapExceeded(cap)
                        found.append(as_single_cycle(g, edges + [e]))
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    edges.append(e)
                    extend(w)
                    edges.pop()
                    path.pop()
                    on_path[w] = False

        extend(s)
        on_path[s] = False

    found.sort(key=lambda c: c.sort_key)
    return found


def oracle_shortest_two_sided(
    g: Graph, s: EmbeddingScheme, cap: int = DEFAULT_CAP
) -> Cycle | None:
    for c in enumerate_simple_cycles(g, cap):
        if edge_set_parity(s, c.edge_ids) is Parity.TWO_SIDED:
            return c
    return None


def oracle_shortest_parity_sets(
    g: Graph, cap: int = DEFAULT_CAP
) -> tuple[list[Cycle], list[Cycle]]:
    """Every minimum-length even cycle and every minimum-length odd cycle."""
    cycles = enumerate_simple_cycles(g, cap)
    even = [c for c in cycles if c.length % 2 == 0]
    odd = [c for c in cycles if c.length % 2 == 1]
    return _shortest(even), _shortest(odd)


def oracle_girth(g: Graph, cap: int = DEFAULT_CAP) -> int | None:
    cycles = enumerate_simple_cycles(g, cap)
    return cycles[0].length if cycles else None


def _shortest(cycles):
    if not cycles:
        return []
    best = cycles[0].length
    return [c for c in cycles if c.length == best]


@dataclass(frozen=True)
class InstanceParams:
    n: int
    extra_edges: int = 0
    negative_fraction: float = 0.0
    with_rotation: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.negative_fraction <= 1.0:
            raise ValueError("negative_fraction must lie in [0, 1]")
        if self.extra_edges < 0:
            raise ValueError("extra_edges must be nonnegative")


def random_instance(p: InstanceParams) -> tuple[Graph, EmbeddingScheme]:
    """Random spanning tree plus ``extra_edges`` random chords.

    Deterministic for a fixed seed.
    """
    n = p.n
    m = n - 1 + p.extra_edges
    if m > n * (n - 1) // 2:
        raise TooManyEdges(n, m)
    rng = random.Random(p.seed)

    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for i in range(1, n):
        edges.append((order[rng.randrange(i)], order[i]))
    present = {(min(u, v), max(u, v)) for u, v in edges}
    absent = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    edges.extend(rng.sample(absent, p.extra_edges))

    g = build_graph(n, edges)
    signature = [-1 if rng.random() < p.negative_fraction else 1 for _ in range(m)]
    rotation = None
    if p.with_rotation:
        rotation = []
        for v in range(n):
            inc = g.incident_edges(v)
            rng.shuffle(inc)
            rotation.append(inc)
    return g, validate_scheme(g, rotation, signature)


def random_projective_instance(
    n: int, extra_edges: int, seed: int, negative_fraction: float = 0.5, max_tries: int = 10_000
) -> tuple[Graph, EmbeddingScheme]:
    """A random instance whose rotations and signatures embed it in the
    projective plane (Euler genus 1, nonorientable).

    Tries derived seeds ``seed, seed+1, ...`` until one qualifies.
    """
    for k in range(max_tries):
        g, s = random_instance(InstanceParams(n, extra_edges, negative_fraction, True, seed + k))
        if euler_genus(g, s) == (1, False):
            return g, s
    raise RuntimeError(f"no projective-plane embedding within {max_tries} tries")


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
