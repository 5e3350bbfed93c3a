"""Command-line interface.

Exit status: 0 on success, 2 when the answer is NONE and the candidate set
certifies that no such cycle exists, 1 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crosscheck import crosscheck
from .embedding import euler_genus, trace_faces
from .errors import ShortCyclesError
from .fileformat import FORMAT_VERSION, format_instance, parse_instance, serialize_report
from .oracle import InstanceParams, random_instance
from .solvers import Query, solve

QUERIES = {
    "twosided": Query.TWO_SIDED,
    "even": Query.EVEN,
    "odd": Query.ODD,
    "girth": Query.GIRTH,
    "contractible": Query.CONTRACTIBLE_PROJECTIVE,
}


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _run_query(args):
    g, s = parse_instance(_read(args.file))
    query = QUERIES[args.command]
    report = solve(query, g, s, threads=args.threads)
    sys.stdout.write(serialize_report(report, args.format))
    if args.timing:
        print(f"elapsed {report.elapsed:.6f}s", file=sys.stderr)
    if report.absent:
        # an even girth leaves shortest odd cycles uncertified
        if query is Query.ODD and report.candidate_counts["C"] > 0:
            return 0
        return 2
    return 0


def _run_genus(args):
    g, s = parse_instance(_read(args.file))
    genus, orientable = euler_genus(g, s)
    faces = trace_faces(g, s).count
    if args.format == "structured":
        doc = {
            "format_version": FORMAT_VERSION,
            "query": "genus",
            "genus": genus,
            "orientable": orientable,
            "faces": faces,
        }
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"genus {genus}\norientable {str(orientable).lower()}\nfaces {faces}\n"
        )
    return 0


def _run_verify(args):
    g, s = parse_instance(_read(args.file))
    checks = crosscheck(g, s, threads=args.threads)
    if args.format == "structured":
        doc = {
            "format_version": FORMAT_VERSION,
            "query": "verify",
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
            ],
        }
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for c in checks:
            sys.stdout.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n")
    return 0 if all(c.passed for c in checks) else 1


def _run_gen(args):
    params = InstanceParams(args.n, args.extra, args.neg, args.rot, args.seed)
    g, s = random_instance(params)
    sys.stdout.write(format_instance(g, s))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="shortcycles",
        description="Shortest two-sided, even and odd cycles via BFS candidate cycles.",
    )
    parser.add_argument("--format", choices=["text", "structured"], default="text")
    parser.add_argument("--threads", type=int, default=1, help="workers for candidate generation")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "twosided": "shortest two-sided cycle",
        "even": "all shortest even cycles",
        "odd": "all shortest odd cycles (odd girth only)",
        "girth": "length of a shortest cycle",
        "contractible": "shortest contractible cycle on the projective plane",
        "genus": "Euler genus and orientability (needs rotations)",
        "verify": "compare solvers against brute-force enumeration",
    }
    handlers = dict.fromkeys(QUERIES, _run_query)
    handlers.update(genus=_run_genus, verify=_run_verify)
    for name, help_text in helps.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="instance file, or - for stdin")
        if name in QUERIES:
            p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
        p.set_defaults(handler=handlers[name])

    p = sub.add_parser("gen", parents=[common], help="emit a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--neg", type=float, default=0.0)
    p.add_argument("--rot", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_run_gen)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ShortCyclesError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
