"""Command-line front door.

Exit codes: 0 success/verified, 1 a verification clause failed, 2 usage or
input error, 3 face budget exceeded.  Errors go to stderr as one line with
the machine-greppable prefix ``error:<kind>:``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import complexes, dimacs, verify
from .complexes import DEFAULT_FACE_BUDGET
from .errors import BudgetExceededError, ParameterError, ToolkitError
from .graphs import (
    CorollaryParams,
    GadgetSpec,
    build_corollary_graph,
    build_gadget,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    kneser_graph,
    mycielskian,
    triangle_free_chromatic,
)
from .homology import certify_conn_zero, homology_profile
from .invariants import chromatic_number, max_clique

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        sys.stderr.write(f"error:usage: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _err(kind: str, exc: BaseException) -> None:
    sys.stderr.write(f"error:{kind}: {exc}\n")


def _dump_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _write_graph_output(g, path: str | None) -> None:
    if path is None or path == "-":
        dimacs.write_graph(g, sys.stdout)
    else:
        dimacs.write_graph(g, path)


def _timer(start: float, enabled: bool) -> int | None:
    return int((time.monotonic() - start) * 1000) if enabled else None


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_construct(args) -> int:
    builders = {
        "complete": lambda: complete_graph(args.p),
        "bipartite": lambda: complete_bipartite(args.l, args.m),
        "cycle": lambda: cycle_graph(args.n),
        "kneser": lambda: kneser_graph(args.n, args.k),
        "mycielski": lambda: mycielskian(dimacs.read_graph(args.graph)),
        "trianglefree": lambda: triangle_free_chromatic(args.q),
    }
    family = args.family
    if family in builders:
        g = builders[family]()
        _write_graph_output(g, args.output)
        return EXIT_OK
    if family == "gadget":
        spec = GadgetSpec(
            h=dimacs.read_graph(args.h), x=args.x, k=dimacs.read_graph(args.k), y=args.y
        )
        built = build_gadget(spec)
        _write_graph_output(built.graph, args.output)
        if args.json is not None:
            _dump_json(
                {"z": built.z, "x": built.x, "y": built.y}, args.json
            )
        return EXIT_OK
    if family == "corollary":
        built = build_corollary_graph(CorollaryParams(args.l, args.m, args.p, args.q))
        _write_graph_output(built.graph, args.output)
        if args.json is not None:
            _dump_json(
                {
                    "biclique": {
                        "left": list(built.biclique_left),
                        "right": list(built.biclique_right),
                    },
                    "clique": list(built.clique),
                    "designated": [built.s_first, built.s_second],
                    "bridge": built.z,
                },
                args.json,
            )
        return EXIT_OK
    raise ParameterError(f"unknown family {family!r}")


def _cmd_ncomplex(args) -> int:
    g = dimacs.read_graph(args.graph)
    nc = complexes.neighborhood_complex(g)
    if args.output is None or args.output == "-":
        complexes.write_facets(nc, sys.stdout)
    else:
        complexes.write_facets(nc, args.output)
    return EXIT_OK


def _cmd_homology(args) -> int:
    start = time.monotonic()
    c = complexes.read_facets(args.complex)
    groups = homology_profile(c, args.max_dim, args.limit)
    certificate = certify_conn_zero(c, args.limit)
    payload = {
        "case": f"homology({args.complex})",
        "homology": [
            {
                "dimension": g.dimension,
                "betti": g.betti,
                "torsion": [str(t) for t in g.torsion],
            }
            for g in groups
        ],
        "certificate": verify._certificate_json(certificate),
        "wall_time_ms": _timer(start, args.timings),
    }
    for g in groups:
        torsion = ",".join(str(t) for t in g.torsion)
        print(f"H~{g.dimension}: betti={g.betti} torsion=[{torsion}]")
    if args.json is not None:
        _dump_json(payload, args.json)
    return EXIT_OK


def _cmd_chromatic(args) -> int:
    g = dimacs.read_graph(args.graph)
    chi, witness = chromatic_number(g)
    print(f"chi={chi}")
    if args.json is not None:
        _dump_json(
            {"chi": chi, "coloring": list(witness.assignment)}, args.json
        )
    return EXIT_OK


def _cmd_clique(args) -> int:
    g = dimacs.read_graph(args.graph)
    omega, witness = max_clique(g)
    print(f"omega={omega}")
    if args.json is not None:
        _dump_json(
            {"omega": omega, "clique": list(witness.vertices)}, args.json
        )
    return EXIT_OK


def _cmd_bounds(args) -> int:
    start = time.monotonic()
    g = dimacs.read_graph(args.graph)
    report = verify.compare_bounds(g, cap=args.max_dim, limit=args.limit)
    payload = verify.bounds_report_json(
        f"bounds({args.graph})", g, report, _timer(start, args.timings)
    )
    certified = report.lovasz_certified
    print(
        f"chi={report.chi} omega={report.omega} "
        f"lovasz_certified={'none' if certified is None else certified} "
        f"greedy_upper={report.greedy_upper}"
    )
    if args.json is not None:
        _dump_json(payload, args.json)
    return EXIT_OK


def _cmd_verify_theorem2(args) -> int:
    start = time.monotonic()
    spec = GadgetSpec(
        h=dimacs.read_graph(args.h), x=args.x, k=dimacs.read_graph(args.k), y=args.y
    )
    report = verify.verify_wedge_decomposition(spec, cap=args.max_dim, limit=args.limit)
    payload = verify.wedge_report_json(
        f"theorem2(h={args.h},x={args.x},k={args.k},y={args.y})",
        {"h": args.h, "x": args.x, "k": args.k, "y": args.y, "max_dim": args.max_dim},
        report,
        _timer(start, args.timings),
    )
    if args.json is not None:
        _dump_json(payload, args.json)
    if report.passed:
        print("pass")
        return EXIT_OK
    failing = [str(r.dim) for r in report.rows if not r.ok]
    if not report.certificate.certified_conn_zero:
        failing.append("certificate")
    _err("verify", RuntimeError(f"wedge check failed: {','.join(failing)}"))
    return EXIT_VERIFY_FAILED


def _cmd_verify_corollary(args) -> int:
    start = time.monotonic()
    report = verify.verify_corollary(
        CorollaryParams(args.l, args.m, args.p, args.q), limit=args.limit
    )
    payload = verify.corollary_report_json(report, _timer(start, args.timings))
    if args.json is not None:
        _dump_json(payload, args.json)
    if report.passed:
        print(
            f"pass chi={report.bound.chi} omega={report.bound.omega} "
            f"lovasz_certified={report.bound.lovasz_certified}"
        )
        return EXIT_OK
    _err(
        "verify",
        RuntimeError(f"clauses failed: {','.join(report.failing_clauses())}"),
    )
    return EXIT_VERIFY_FAILED


def _cmd_verify_suite(args) -> int:
    result = verify.run_suite(
        seed=args.seed, full=args.full, limit=args.limit, jobs=args.jobs
    )
    _dump_json(result, args.json)
    n = len(result["cases"])
    failed = [c["case"] for c in result["cases"] if not c["pass"]]
    print(f"suite: {n - len(failed)}/{n} cases passed")
    if failed:
        _err("verify", RuntimeError(f"failing cases: {','.join(failed)}"))
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring


def _add_limit(p) -> None:
    p.add_argument(
        "--limit", type=int, default=DEFAULT_FACE_BUDGET, help="face-count budget"
    )


def _add_json(p) -> None:
    p.add_argument("--json", metavar="FILE", help="write a JSON report ('-' = stdout)")
    p.add_argument(
        "--timings",
        action="store_true",
        help="fill wall_time_ms in reports (off by default so reports are byte-stable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lovaszgap")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a graph and write DIMACS")
    csub = construct.add_subparsers(dest="family", required=True)
    for name, flags in (
        ("complete", (("--p", int),)),
        ("bipartite", (("--l", int), ("--m", int))),
        ("cycle", (("--n", int),)),
        ("kneser", (("--n", int), ("--k", int))),
        ("trianglefree", (("--q", int),)),
    ):
        p = csub.add_parser(name)
        for flag, typ in flags:
            p.add_argument(flag, type=typ, required=True)
        p.add_argument("-o", "--output", metavar="FILE")
        p.set_defaults(func=_cmd_construct)
    p = csub.add_parser("mycielski")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_construct)
    p = csub.add_parser("gadget")
    p.add_argument("--h", required=True, metavar="FILE")
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--k", required=True, metavar="FILE")
    p.add_argument("--y", type=int, default=0)
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=_cmd_construct)
    p = csub.add_parser("corollary")
    for flag in ("--l", "--m", "--p", "--q"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("ncomplex", help="neighborhood complex facets of a graph")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("-o", "--output", metavar="FACETS")
    p.set_defaults(func=_cmd_ncomplex)

    p = sub.add_parser("homology", help="reduced homology of a facet-list complex")
    p.add_argument("--complex", required=True, metavar="FACETS")
    p.add_argument("--max-dim", type=int, default=2)
    _add_limit(p)
    _add_json(p)
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("chromatic", help="exact chromatic number")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("clique", help="exact clique number")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("bounds", help="compare chi, omega, and the certified bound")
    p.add_argument("graph", metavar="GRAPH")
    p.add_argument("--max-dim", type=int, default=2)
    _add_limit(p)
    _add_json(p)
    p.set_defaults(func=_cmd_bounds)

    verify_p = sub.add_parser("verify", help="run a verification pipeline")
    vsub = verify_p.add_subparsers(dest="pipeline", required=True)

    p = vsub.add_parser("theorem2", help="wedge decomposition of a gadget complex")
    p.add_argument("--h", required=True, metavar="GRAPH")
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--k", required=True, metavar="GRAPH")
    p.add_argument("--y", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=2)
    _add_limit(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_theorem2)

    p = vsub.add_parser("corollary", help="chi/omega/bound separation check")
    for flag in ("--l", "--m", "--p", "--q"):
        p.add_argument(flag, type=int, required=True)
    _add_limit(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_corollary)

    p = vsub.add_parser("suite", help="run the whole verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--full",
        action="store_true",
        help="include the slow q=5 separation case",
    )
    _add_limit(p)
    p.add_argument("--json", metavar="FILE", help="write the suite report")
    p.set_defaults(func=_cmd_verify_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        _err(exc.kind, exc)
        return EXIT_BUDGET
    except ToolkitError as exc:
        _err(exc.kind, exc)
        return EXIT_USAGE
    except OSError as exc:
        _err("input", exc)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())
