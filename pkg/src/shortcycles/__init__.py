"""Short cycles in embedded graphs from breadth-first-search candidate cycles."""

from .cyclespace import (
    CandidateSet,
    Candidates,
    Cycle,
    FundamentalTag,
    SumTag,
    as_single_cycle,
    build_candidates,
    candidate_c,
    fundamental_cycle,
    generate_c1,
    generate_c2,
    symmetric_difference,
)
from .embedding import (
    EmbeddingScheme,
    FaceSet,
    Parity,
    edge_set_parity,
    euler_genus,
    local_change,
    normalize_on_tree,
    trace_faces,
    validate_scheme,
)
from .errors import *  # noqa: F401,F403
from .graph import BfsTree, Graph, bfs_tree, build_graph, is_connected, tree_path
from .solvers import (
    Query,
    SolverReport,
    girth,
    is_isometric_cycle,
    shortest_contractible_projective,
    shortest_even_cycles,
    shortest_odd_cycles,
    shortest_two_sided,
    solve,
)

__version__ = "0.1.0"
