"""Line-oriented instance files and solver report serialization.

Instance grammar (``#`` starts a comment, blank lines are ignored)::

    graph <n> <m>
    e <id> <u> <v> [+1|-1]      # m lines, ids 0..m-1 in order
    rot <v> <e> <e> ...         # optional, one line per vertex, cyclic order

Missing signatures default to ``+1``. Rotations are given for every vertex
or for none.
"""

from __future__ import annotations

import json

from .cyclespace import Cycle, FundamentalTag, SumTag
from .embedding import EmbeddingScheme, edge_set_parity, validate_scheme
from .errors import GraphError, IdMismatch, InstanceSyntaxError, SchemeError
from .graph import Graph, build_graph
from .solvers import Query, SolverReport

FORMAT_VERSION = 1

_SIGNS = {"+1": 1, "1": 1, "-1": -1}


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise InstanceSyntaxError(lineno, f"expected integer {what}, got {token!r}") from None


def parse_instance(text: str) -> tuple[Graph, EmbeddingScheme]:
    header = None
    edges = []
    signs = []
    edge_lines = []
    rotation = {}
    rot_lines = {}
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        tokens = line.split()
        kind = tokens[0]
        if kind == "graph":
            if header is not None:
                raise InstanceSyntaxError(lineno, "duplicate graph header")
            if len(tokens) != 3:
                raise InstanceSyntaxError(lineno, "expected 'graph <n> <m>'")
            header = (_int(tokens[1], lineno, "n"), _int(tokens[2], lineno, "m"))
            if header[0] < 1 or header[1] < 0:
                raise InstanceSyntaxError(lineno, "need n >= 1 and m >= 0")
        elif header is None:
            raise InstanceSyntaxError(lineno, "records before the graph header")
        elif kind == "e":
            if rotation:
                raise InstanceSyntaxError(lineno, "edge record after rotation records")
            if len(tokens) not in (4, 5):
                raise InstanceSyntaxError(lineno, "expected 'e <id> <u> <v> [+1|-1]'")
            eid = _int(tokens[1], lineno, "edge id")
            if eid != len(edges):
                raise IdMismatch(lineno, f"expected edge id {len(edges)}, got {eid}")
            if eid >= header[1]:
                raise IdMismatch(lineno, f"edge id {eid} exceeds the declared m={header[1]}")
            edges.append((_int(tokens[2], lineno, "endpoint"), _int(tokens[3], lineno, "endpoint")))
            if len(tokens) == 5:
                if tokens[4] not in _SIGNS:
                    raise InstanceSyntaxError(lineno, f"signature must be +1 or -1, got {tokens[4]!r}")
                signs.append(_SIGNS[tokens[4]])
            else:
                signs.append(1)
            edge_lines.append(lineno)
        elif kind == "rot":
            if len(tokens) < 2:
                raise InstanceSyntaxError(lineno, "expected 'rot <v> <e...>'")
            v = _int(tokens[1], lineno, "vertex")
            if not 0 <= v < header[0]:
                raise InstanceSyntaxError(lineno, f"rotation for unknown vertex {v}")
            if v in rotation:
                raise InstanceSyntaxError(lineno, f"duplicate rotation for vertex {v}")
            rotation[v] = [_int(t, lineno, "edge id") for t in tokens[2:]]
            rot_lines[v] = lineno
        else:
            raise InstanceSyntaxError(lineno, f"unknown record type {kind!r}")

    if header is None:
        raise InstanceSyntaxError(last_line + 1, "missing graph header")
    n, m = header
    if len(edges) != m:
        raise IdMismatch(last_line, f"declared {m} edges, found {len(edges)}")
    if rotation and len(rotation) != n:
        missing = min(set(range(n)) - set(rotation))
        raise InstanceSyntaxError(last_line, f"rotations are all-or-none; vertex {missing} has none")

    try:
        g = build_graph(n, edges)
    except GraphError as err:
        line = edge_lines[err.index] if hasattr(err, "index") else last_line
        raise _with_line(err, line)
    try:
        s = validate_scheme(g, rotation or None, signs)
    except SchemeError as err:
        line = rot_lines.get(getattr(err, "vertex", None), last_line)
        raise _with_line(err, line)
    return g, s


def _with_line(err, line):
    err.line = line
    err.args = (f"line {line}: {err}",)
    return err


def format_instance(g: Graph, s: EmbeddingScheme) -> str:
    lines = [f"graph {g.n} {g.m}"]
    for e, (u, v) in enumerate(g.edges):
        lines.append(f"e {e} {u} {v} {'+1' if s.signature[e] > 0 else '-1'}")
    if s.rotation is not None:
        for v, rot in enumerate(s.rotation):
            lines.append(" ".join(["rot", str(v), *map(str, rot)]))
    return "\n".join(lines) + "\n"


def _cycle_line(c: Cycle) -> str:
    return f"{c.length}: " + " ".join(map(str, c.vertex_walk))


def _tag_json(tag):
    if isinstance(tag, FundamentalTag):
        return {"root": tag.root, "edge": tag.edge}
    if isinstance(tag, SumTag):
        return {"pair": [tag.first, tag.second]}
    raise TypeError(tag)


def cycle_json(c: Cycle, s: EmbeddingScheme | None = None) -> dict:
    doc = {
        "length": c.length,
        "edge_ids": list(c.edge_ids),
        "vertex_walk": list(c.vertex_walk),
        "provenance": [_tag_json(t) for t in c.provenance],
    }
    if s is not None:
        doc["parity"] = str(edge_set_parity(s, c.edge_ids))
    return doc


def serialize_report(r: SolverReport, fmt: str = "text") -> str:
    """Render a report. Elapsed time is left out so output is reproducible."""
    result = r.result
    if fmt == "structured":
        if result is None:
            body = None
        elif isinstance(result, int):
            body = result
        elif isinstance(result, Cycle):
            body = cycle_json(result, r.scheme)
        else:
            body = [cycle_json(c, r.scheme) for c in result]
        doc = {
            "format_version": FORMAT_VERSION,
            "query": r.query.value,
            "result": body,
            "candidate_counts": r.candidate_counts,
        }
        if r.absent:
            doc["reason"] = r.reason
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    if r.absent:
        return f"NONE\nreason: {r.reason}\n"
    if r.query is Query.GIRTH:
        return f"{result}\n"
    if isinstance(result, Cycle):
        return _cycle_line(result) + "\n"
    return "".join(_cycle_line(c) + "\n" for c in result)
