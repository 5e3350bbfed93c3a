import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import signed
from shortcycles.embedding import (
    Parity,
    all_positive,
    edge_set_parity,
    euler_genus,
    local_change,
    mirror_dart,
    normalize_on_tree,
    trace_faces,
    validate_scheme,
)
from shortcycles.errors import BadRotation, BadSignatureValue, MissingRotation, MissingSignature
from shortcycles.graph import bfs_tree, build_graph
from shortcycles.oracle import InstanceParams, enumerate_simple_cycles, random_instance

K4_ROT = [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]


def test_validate_k4(k4):
    s = validate_scheme(k4, K4_ROT, [1] * 6)
    assert s.rotation == tuple(map(tuple, K4_ROT))
    assert s.signature == (1,) * 6


def test_bad_rotation(k4):
    rot = [[0, 1, 3]] + K4_ROT[1:]
    with pytest.raises(BadRotation) as info:
        validate_scheme(k4, rot, [1] * 6)
    assert info.value.vertex == 0
    with pytest.raises(BadRotation):
        validate_scheme(k4, [[0, 1, 2, 2]] + K4_ROT[1:], [1] * 6)


def test_bad_signatures(k4):
    with pytest.raises(BadSignatureValue) as info:
        validate_scheme(k4, None, [1, 1, 1, 1, 1, 0])
    assert info.value.edge == 5
    with pytest.raises(MissingSignature) as info:
        validate_scheme(k4, None, {0: 1, 1: 1, 2: 1, 3: 1, 5: 1})
    assert info.value.edge == 4


def test_parity_examples(triangle):
    assert edge_set_parity(all_positive(triangle), []) is Parity.TWO_SIDED
    assert edge_set_parity(signed(triangle, [1, 1, -1]), [0, 1, 2]) is Parity.ONE_SIDED
    assert edge_set_parity(signed(triangle, [-1, -1, 1]), [0, 1, 2]) is Parity.TWO_SIDED


def test_local_change_triangle(triangle):
    s = all_positive(triangle, [[0, 2], [0, 1], [1, 2]])
    flipped = local_change(s, 0)
    # edges: 0=(0,1), 1=(1,2), 2=(0,2)
    assert flipped.signature == (-1, 1, -1)
    assert flipped.rotation[0] == (2, 0)
    assert flipped.rotation[1:] == s.rotation[1:]
    assert edge_set_parity(flipped, [0, 1, 2]) is Parity.TWO_SIDED
    assert local_change(flipped, 0) == s


def test_local_change_k4(k4):
    s = validate_scheme(k4, K4_ROT, [1] * 6)
    flipped = local_change(s, 0)
    assert flipped.signature == (-1, -1, -1, 1, 1, 1)
    assert edge_set_parity(flipped, [3, 4, 5]) is Parity.TWO_SIDED


def test_normalize_examples(k4, path3):
    s = all_positive(k4)
    assert normalize_on_tree(s, bfs_tree(k4, 2)) == s
    s = signed(path3, [-1, 1])
    # flipping vertex 1 fixes e01 but makes e12 negative, so vertex 2 flips next
    assert local_change(s, 1).signature == (1, -1)
    out = normalize_on_tree(s, bfs_tree(path3, 0))
    assert out.signature == (1, 1)
    assert out == local_change(local_change(s, 1), 2)


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 8), extra=st.integers(0, 6))
def test_normalize_preserves_parities(seed, n, extra):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g, s = random_instance(InstanceParams(n, extra, 0.5, True, seed))
    t = bfs_tree(g, random.Random(seed).randrange(n))
    out = normalize_on_tree(s, t)
    assert all(out.signature[e] == 1 for e in t.tree_edges)
    for c in enumerate_simple_cycles(g):
        assert edge_set_parity(out, c.edge_ids) is edge_set_parity(s, c.edge_ids)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 9), extra=st.integers(0, 8))
def test_parity_homomorphism(seed, n, extra):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g, s = random_instance(InstanceParams(n, extra, 0.5, False, seed))
    rng = random.Random(seed)
    for _ in range(100):
        a = {e for e in range(g.m) if rng.random() < 0.5}
        b = {e for e in range(g.m) if rng.random() < 0.5}
        bit = lambda es: edge_set_parity(s, es) is Parity.ONE_SIDED
        assert bit(a ^ b) == (bit(a) != bit(b))


def test_faces_triangle(triangle):
    faces = trace_faces(triangle, all_positive(triangle, [[0, 2], [0, 1], [1, 2]]))
    assert faces.count == 2
    assert euler_genus(triangle, all_positive(triangle, [[0, 2], [0, 1], [1, 2]])) == (0, True)


def test_faces_projective_triangle(triangle):
    # hand trace: from (e0, tail 0, +1) the walk runs through all three
    # edges twice, flipping the flag at e2, before closing: one face
    s = signed(triangle, [1, 1, -1], [[0, 2], [0, 1], [1, 2]])
    faces = trace_faces(triangle, s)
    assert faces.count == 1
    assert len(faces.faces[0]) == 6
    assert euler_genus(triangle, s) == (1, False)


def test_faces_planar_k4(k4_planar):
    g, s = k4_planar
    faces = trace_faces(g, s)
    assert faces.count == 4
    assert sorted(len(f) for f in faces.faces) == [3, 3, 3, 3]
    assert euler_genus(g, s) == (0, True)


def test_faces_need_rotation(triangle):
    with pytest.raises(MissingRotation):
        trace_faces(triangle, all_positive(triangle))


def test_single_vertex_is_spherical():
    g = build_graph(1, [])
    assert euler_genus(g, all_positive(g, [[]])) == (0, True)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 9), extra=st.integers(0, 8))
def test_face_orbits_partition_darts(seed, n, extra):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g, s = random_instance(InstanceParams(n, extra, 0.4, True, seed))
    faces = trace_faces(g, s)
    states = [d for orbit in faces.orbits for d in orbit]
    assert len(states) == len(set(states)) == 4 * g.m
    assert len(faces.orbits) == 2 * faces.count
    # kept faces and their reversals together cover every state once
    kept = {d for f in faces.faces for d in f}
    mirrored = {mirror_dart(s, d) for d in kept}
    assert kept.isdisjoint(mirrored)
    assert len(kept | mirrored) == 4 * g.m
    assert sum(len(f) for f in faces.faces) == 2 * g.m
    genus, _ = euler_genus(g, s)
    assert genus >= 0


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 8), extra=st.integers(0, 6))
def test_genus_invariant_under_local_changes(seed, n, extra):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g, s = random_instance(InstanceParams(n, extra, 0.5, True, seed))
    before = euler_genus(g, s)
    rng = random.Random(seed)
    for _ in range(10):
        s = local_change(s, rng.randrange(n))
    assert euler_genus(g, s) == before
