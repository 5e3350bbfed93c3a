import math
import random

import pytest

from shortcycles.embedding import all_positive, validate_scheme
from shortcycles.graph import build_graph
from shortcycles.oracle import InstanceParams, complete_graph, cycle_graph, petersen_graph, random_instance


def planar_rotation(g, coords):
    """Clockwise rotation at every vertex of a straight-line drawing."""
    rotation = []
    for v in range(g.n):
        x0, y0 = coords[v]

        def angle(item):
            w, _ = item
            x, y = coords[w]
            return -math.atan2(y - y0, x - x0)

        rotation.append([e for _, e in sorted(g.adjacency[v], key=angle)])
    return rotation


def small_params(rng, seed, with_rotation=False, n_range=(4, 9), extra_range=(1, 6)):
    n = rng.randint(*n_range)
    capacity = n * (n - 1) // 2 - (n - 1)
    extra = min(rng.randint(*extra_range), capacity)
    neg = rng.choice([0.0, 0.3, 0.5, 1.0])
    return InstanceParams(n, extra, neg, with_rotation, seed)


def corpus(count, master_seed, with_rotation=False, **kwargs):
    rng = random.Random(master_seed)
    out = []
    for _ in range(count):
        p = small_params(rng, rng.getrandbits(64), with_rotation, **kwargs)
        out.append((p, *random_instance(p)))
    return out


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k4_planar():
    g = complete_graph(4)
    coords = {0: (0.0, 2.0), 1: (-2.0, -1.0), 2: (2.0, -1.0), 3: (0.0, 0.0)}
    return g, all_positive(g, planar_rotation(g, coords))


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


def signed(g, signs, rotation=None):
    return validate_scheme(g, rotation, signs)
