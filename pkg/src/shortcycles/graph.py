"""Simple undirected graphs with dense integer IDs, BFS trees and tree paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import EndpointOutOfRange, LoopEdge, ParallelEdge, RootOutOfRange


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edge IDs are positions in ``edges``. ``adjacency[v]`` lists
    ``(neighbor, edge_id)`` pairs sorted by neighbor, which fixes every
    traversal order downstream.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def incident_edges(self, v: int) -> list[int]:
        return [e for _, e in self.adjacency[v]]

    def edge_between(self, u: int, v: int) -> int | None:
        for w, e in self.adjacency[u]:
            if w == v:
                return e
        return None


def build_graph(n: int, edge_list) -> Graph:
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    edges = []
    seen = set()
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edge_list):
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(i)
        if u == v:
            raise LoopEdge(i)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParallelEdge(i)
        seen.add(key)
        edges.append((u, v))
        adj[u].append((v, i))
        adj[v].append((u, i))
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n, tuple(edges), adjacency)


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


@dataclass(frozen=True)
class BfsTree:
    """Breadth-first-search tree. ``parent_edge[root]`` is ``-1``."""

    root: int
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]
    parent: tuple[int, ...]

    @cached_property
    def tree_edges(self) -> frozenset[int]:
        return frozenset(e for e in self.parent_edge if e >= 0)

    def contains_edge(self, e: int) -> bool:
        return e in self.tree_edges


def bfs_tree(g: Graph, root: int) -> BfsTree:
    """FIFO breadth-first search; neighbors are scanned in ascending order
    and every vertex keeps the edge of its first discoverer."""
    if not 0 <= root < g.n:
        raise RootOutOfRange(root)
    depth = [-1] * g.n
    parent_edge = [-1] * g.n
    parent = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, e in g.adjacency[v]:
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent_edge[w] = e
                parent[w] = v
                queue.append(w)
    return BfsTree(root, tuple(parent_edge), tuple(depth), tuple(parent))


def distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; ``-1`` marks unreachable vertices."""
    return list(bfs_tree(g, source).depth)


def tree_path(t: BfsTree, v: int) -> list[int]:
    """Edges on the tree path from ``v`` up to the root."""
    path = []
    while v != t.root:
        path.append(t.parent_edge[v])
        v = t.parent[v]
    return path
