"""Compare the candidate-set solvers with exhaustive enumeration on one instance."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclespace import build_candidates
from .embedding import EmbeddingScheme, Parity, edge_set_parity, euler_genus
from .graph import Graph
from .oracle import DEFAULT_CAP, enumerate_simple_cycles
from .solvers import shortest_even_cycles, shortest_two_sided


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def _length(c):
    return None if c is None else c.length


def crosscheck(g: Graph, s: EmbeddingScheme, threads: int = 1, cap: int = DEFAULT_CAP) -> list[Check]:
    cand = build_candidates(g, threads)
    cycles = enumerate_simple_cycles(g, cap)
    checks = []

    two_sided = [c for c in cycles if edge_set_parity(s, c.edge_ids) is Parity.TWO_SIDED]
    want = _length(two_sided[0] if two_sided else None)
    got = _length(shortest_two_sided(g, s, cand))
    checks.append(Check("two_sided", want == got, f"solver {got}, oracle {want}"))

    even = [c for c in cycles if c.is_even]
    want_even = {c.edge_ids for c in even if c.length == even[0].length} if even else set()
    got_even = {c.edge_ids for c in shortest_even_cycles(g, cand)}
    checks.append(Check(
        "even_complete", want_even == got_even,
        f"solver {len(got_even)} cycles, oracle {len(want_even)} cycles",
    ))

    if cycles and cycles[0].length % 2:
        shortest = [c for c in cycles if c.length == cycles[0].length]
        missing = [c for c in shortest if c.edge_ids not in cand.c1]
        checks.append(Check(
            "odd_in_c1", not missing,
            f"{len(shortest) - len(missing)}/{len(shortest)} shortest odd cycles in C1",
        ))
    else:
        checks.append(Check("odd_in_c1", True, "girth is not odd; nothing to check"))

    if s.rotation is not None and euler_genus(g, s) == (1, False):
        # two-sided and contractible agree on the projective plane
        checks.append(Check("contractible_projective", want == got, f"solver {got}, oracle {want}"))
    return checks
