"""Embedding schemes: rotations plus edge signatures.

A scheme pairs an optional rotation system (a cyclic order of the incident
edges at every vertex) with a signature of ``+1``/``-1`` on every edge.
Signature-only schemes are enough for two-sidedness; face tracing and
genus need the rotations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import BadRotation, BadSignatureValue, MissingRotation, MissingSignature
from .graph import BfsTree, Graph, bfs_tree


class Parity(enum.Enum):
    TWO_SIDED = "two_sided"
    ONE_SIDED = "one_sided"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EmbeddingScheme:
    graph: Graph = field(repr=False)
    signature: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...] | None = None

    @property
    def has_rotation(self) -> bool:
        return self.rotation is not None

    @cached_property
    def negative_mask(self) -> int:
        """Bitmask of the edges with signature ``-1``."""
        mask = 0
        for e, sign in enumerate(self.signature):
            if sign < 0:
                mask |= 1 << e
        return mask

    @cached_property
    def _rotation_position(self) -> tuple[dict[int, int], ...]:
        if self.rotation is None:
            raise MissingRotation()
        return tuple({e: i for i, e in enumerate(rot)} for rot in self.rotation)

    def rotation_successor(self, v: int, e: int, step: int = 1) -> int:
        """Edge after ``e`` in the rotation at ``v``; ``step=-1`` walks the inverse."""
        rot = self.rotation[v]
        return rot[(self._rotation_position[v][e] + step) % len(rot)]


def validate_scheme(
    g: Graph,
    rotation: Mapping[int, Sequence[int]] | Sequence[Sequence[int]] | None,
    signature: Mapping[int, int] | Sequence[int],
) -> EmbeddingScheme:
    if isinstance(signature, Mapping):
        lookup = signature
    else:
        lookup = dict(enumerate(signature))
    signs = []
    for e in range(g.m):
        if e not in lookup:
            raise MissingSignature(e)
        value = lookup[e]
        if value not in (1, -1) or isinstance(value, bool):
            raise BadSignatureValue(e)
        signs.append(int(value))

    rot = None
    if rotation is not None:
        rot = []
        for v in range(g.n):
            try:
                order = tuple(int(e) for e in rotation[v])
            except (KeyError, IndexError):
                raise BadRotation(v) from None
            if sorted(order) != sorted(g.incident_edges(v)):
                raise BadRotation(v)
            rot.append(order)
        rot = tuple(rot)
    return EmbeddingScheme(g, tuple(signs), rot)


def all_positive(g: Graph, rotation=None) -> EmbeddingScheme:
    return validate_scheme(g, rotation, [1] * g.m)


def edge_mask(es: Iterable[int]) -> int:
    mask = 0
    for e in es:
        mask |= 1 << e
    return mask


def mask_parity(s: EmbeddingScheme, mask: int) -> Parity:
    if (mask & s.negative_mask).bit_count() % 2:
        return Parity.ONE_SIDED
    return Parity.TWO_SIDED


def edge_set_parity(s: EmbeddingScheme, es: Iterable[int] | int) -> Parity:
    """Two-sided iff ``es`` holds an even number of negative edges.

    ``es`` may be an iterable of edge IDs or an edge bitmask.
    """
    mask = es if isinstance(es, int) else edge_mask(es)
    return mask_parity(s, mask)


def local_change(s: EmbeddingScheme, v: int) -> EmbeddingScheme:
    """Flip vertex ``v``: reverse its rotation and negate its incident signatures."""
    g = s.graph
    signs = list(s.signature)
    for e in g.incident_edges(v):
        signs[e] = -signs[e]
    rot = s.rotation
    if rot is not None:
        rot = rot[:v] + (tuple(reversed(rot[v])),) + rot[v + 1:]
    return EmbeddingScheme(g, tuple(signs), rot)


def normalize_on_tree(s: EmbeddingScheme, t: BfsTree) -> EmbeddingScheme:
    """Equivalent scheme with every edge of the spanning tree ``t`` positive.

    Vertices are visited root-down (by depth), and a vertex is flipped iff
    its parent edge is currently negative.
    """
    g = s.graph
    order = sorted(range(g.n), key=lambda v: (t.depth[v], v))
    for v in order:
        e = t.parent_edge[v]
        if e >= 0 and s.signature[e] < 0:
            s = local_change(s, v)
    return s


@dataclass(frozen=True)
class FaceSet:
    """Faces of an embedding, one closed walk per face.

    Each walk step is ``(edge, tail, flag)``: the edge is traversed away from
    ``tail`` while the local orientation at ``tail`` is ``flag``. Every face
    is traced twice by the successor rule (once per orientation); ``faces``
    keeps one walk per face and ``orbits`` keeps both.
    """

    faces: tuple[tuple[tuple[int, int, int], ...], ...]
    orbits: tuple[tuple[tuple[int, int, int], ...], ...] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.faces)


def _next_dart(s: EmbeddingScheme, dart):
    e, tail, flag = dart
    g = s.graph
    head = g.other(e, tail)
    flag *= s.signature[e]
    return s.rotation_successor(head, e, flag), head, flag


def mirror_dart(s: EmbeddingScheme, dart):
    """The state that traces the same face step in the opposite direction."""
    e, tail, flag = dart
    return e, s.graph.other(e, tail), -flag * s.signature[e]


def trace_faces(g: Graph, s: EmbeddingScheme) -> FaceSet:
    if s.rotation is None:
        raise MissingRotation()
    if g.m == 0:
        # a lone vertex on the sphere bounds a single face
        return FaceSet(((),), ((),))
    darts = []
    for e, (u, v) in enumerate(g.edges):
        for tail in (u, v):
            for flag in (1, -1):
                darts.append((e, tail, flag))
    seen = set()
    orbits = []
    for start in darts:
        if start in seen:
            continue
        orbit = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            orbit.append(dart)
            dart = _next_dart(s, dart)
        orbits.append(tuple(orbit))

    # an orbit and its reversal describe one face; keep the orbit whose
    # minimum state is smaller
    owner = {}
    for i, orbit in enumerate(orbits):
        for dart in orbit:
            owner[dart] = i
    faces = []
    for i, orbit in enumerate(orbits):
        j = owner[mirror_dart(s, orbit[0])]
        if j == i or min(orbit) < min(orbits[j]):
            faces.append(orbit)
    return FaceSet(tuple(faces), tuple(orbits))


def is_orientable(s: EmbeddingScheme) -> bool:
    normalized = normalize_on_tree(s, bfs_tree(s.graph, 0))
    return all(sign > 0 for sign in normalized.signature)


def euler_genus(g: Graph, s: EmbeddingScheme) -> tuple[int, bool]:
    """Euler genus ``2 - n + m - f`` and orientability of the embedding."""
    faces = trace_faces(g, s)
    return 2 - g.n + g.m - faces.count, is_orientable(s)
