import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from shortcycles.errors import EndpointOutOfRange, LoopEdge, ParallelEdge, RootOutOfRange
from shortcycles.graph import bfs_tree, build_graph, is_connected, tree_path
from shortcycles.oracle import InstanceParams, complete_graph, cycle_graph, random_instance


def test_build_k4(k4):
    assert k4.n == 4
    assert k4.m == 6
    assert k4.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    for v in range(4):
        nbrs = [w for w, _ in k4.adjacency[v]]
        assert nbrs == sorted(nbrs)


@pytest.mark.parametrize(
    "n, edges, error, index",
    [
        (2, [(0, 0)], LoopEdge, 0),
        (3, [(0, 1), (1, 0)], ParallelEdge, 1),
        (3, [(0, 1), (1, 2), (2, 1)], ParallelEdge, 2),
        (3, [(0, 1), (1, 3)], EndpointOutOfRange, 1),
        (3, [(-1, 1)], EndpointOutOfRange, 0),
    ],
)
def test_build_rejects(n, edges, error, index):
    with pytest.raises(error) as info:
        build_graph(n, edges)
    assert info.value.index == index


def test_is_connected(k4):
    assert is_connected(k4)
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(build_graph(1, []))


def test_bfs_k4(k4):
    t = bfs_tree(k4, 0)
    assert t.depth == (0, 1, 1, 1)
    for v in (1, 2, 3):
        assert t.parent[v] == 0
        assert 0 in k4.edges[t.parent_edge[v]]


def test_bfs_path_and_cycle(path3):
    assert bfs_tree(path3, 0).depth == (0, 1, 2)
    assert bfs_tree(cycle_graph(5), 0).depth == (0, 1, 2, 2, 1)


def test_bfs_root_out_of_range(k4):
    with pytest.raises(RootOutOfRange):
        bfs_tree(k4, 4)


def test_tree_path(k4, path3):
    t = bfs_tree(path3, 0)
    assert tree_path(t, 0) == []
    assert tree_path(t, 2) == [1, 0]
    assert tree_path(bfs_tree(k4, 0), 3) == [2]


def reference_distances(g, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in range(g.n):
            if w not in dist and g.edge_between(v, w) is not None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return [dist[v] for v in range(g.n)]


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(1, 12), extra=st.integers(0, 10))
def test_bfs_tree_properties(seed, n, extra):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g, _ = random_instance(InstanceParams(n, extra, seed=seed))
    root = random.Random(seed).randrange(n)
    t = bfs_tree(g, root)
    assert t == bfs_tree(g, root)
    assert list(t.depth) == reference_distances(g, root)
    for e, (u, v) in enumerate(g.edges):
        if e not in t.tree_edges:
            assert abs(t.depth[u] - t.depth[v]) <= 1
    for v in range(n):
        path = tree_path(t, v)
        assert len(path) == t.depth[v]
        for a, b in zip(path, path[1:]):
            assert len(set(g.edges[a]) & set(g.edges[b])) == 1


def test_complete_graph_sizes():
    for n in range(1, 7):
        assert complete_graph(n).m == n * (n - 1) // 2
