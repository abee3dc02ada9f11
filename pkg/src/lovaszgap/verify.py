"""End-to-end verification pipelines and machine-readable reports.

Two checks are wired together here.  The wedge check computes reduced
Betti numbers and torsion of the bridged gadget's neighborhood complex and
compares them, degree by degree, against the sum of the parts plus one
extra circle in degree 1, which is the homological consequence of
collapsing the bridge.  The separation check builds the composite graph
and verifies, all exactly, that its chromatic number hits the target, the
clique number stays at the planted clique, the planted biclique is
present, and the certified topological bound is stuck at 3.
"""

from __future__ import annotations

import functools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .complexes import DEFAULT_FACE_BUDGET, neighborhood_complex
from .errors import PreconditionError
from .graphs import (
    CorollaryParams,
    CorollaryResult,
    GadgetSpec,
    Graph,
    build_corollary_graph,
    build_gadget,
    complete_graph,
    cycle_graph,
    is_bipartite,
    is_connected,
)
from .homology import (
    EMPTY_SENTINEL,
    FLAG_NO_CERTIFICATE,
    ConnectivityCertificate,
    HomologyGroup,
    certify_conn_zero,
    homology_profile,
)
from .invariants import (
    CliqueWitness,
    ColoringWitness,
    chromatic_number,
    greedy_dsatur_bound,
    max_clique,
    verify_biclique_certificate,
)


@dataclass(frozen=True)
class WedgeCheckRow:
    dim: int
    gadget_betti: int
    first_betti: int
    second_betti: int
    expected_betti: int
    betti_ok: bool
    gadget_torsion: tuple[int, ...]
    expected_torsion: tuple[int, ...]
    torsion_ok: bool

    @property
    def ok(self) -> bool:
        return self.betti_ok and self.torsion_ok


@dataclass(frozen=True)
class WedgeCheckReport:
    rows: tuple[WedgeCheckRow, ...]
    certificate: ConnectivityCertificate
    gadget_graph: Graph
    passed: bool


def _require_wedge_hypotheses(g: Graph, which: str) -> None:
    if not is_connected(g):
        raise PreconditionError(f"{which} graph must be connected")
    bipartite, _ = is_bipartite(g)
    if bipartite:
        raise PreconditionError(f"{which} graph must be non-bipartite")


def verify_wedge_decomposition(
    spec: GadgetSpec, cap: int = 2, limit: int = DEFAULT_FACE_BUDGET
) -> WedgeCheckReport:
    """Check that the gadget's neighborhood complex carries exactly the
    homology of the two parts' complexes plus one extra circle, and that
    the conn = 0 certificate holds on it."""
    _require_wedge_hypotheses(spec.h, "first")
    _require_wedge_hypotheses(spec.k, "second")
    built = build_gadget(spec)
    gadget_profile = homology_profile(neighborhood_complex(built.graph), cap, limit)
    first_profile = homology_profile(neighborhood_complex(spec.h), cap, limit)
    second_profile = homology_profile(neighborhood_complex(spec.k), cap, limit)
    rows = []
    for i in range(cap + 1):
        expected_betti = (
            first_profile[i].betti
            + second_profile[i].betti
            + (1 if i == 1 else 0)
        )
        expected_torsion = tuple(
            sorted(first_profile[i].torsion + second_profile[i].torsion)
        )
        gadget_torsion = tuple(sorted(gadget_profile[i].torsion))
        rows.append(
            WedgeCheckRow(
                dim=i,
                gadget_betti=gadget_profile[i].betti,
                first_betti=first_profile[i].betti,
                second_betti=second_profile[i].betti,
                expected_betti=expected_betti,
                betti_ok=gadget_profile[i].betti == expected_betti,
                gadget_torsion=gadget_torsion,
                expected_torsion=expected_torsion,
                torsion_ok=gadget_torsion == expected_torsion,
            )
        )
    certificate = certify_conn_zero(neighborhood_complex(built.graph), limit)
    passed = all(r.ok for r in rows) and certificate.certified_conn_zero
    return WedgeCheckReport(tuple(rows), certificate, built.graph, passed)


# ---------------------------------------------------------------------------
# bound comparison


@dataclass(frozen=True)
class BoundReport:
    chi: int
    omega: int
    lovasz_certified: int | None
    greedy_upper: int
    flags: tuple[str, ...]
    homology: tuple[HomologyGroup, ...]
    certificate: ConnectivityCertificate
    homological_connectivity: int | str
    coloring: ColoringWitness
    clique: CliqueWitness

    def validate(self) -> None:
        if not (self.omega <= self.chi <= self.greedy_upper):
            raise RuntimeError(
                f"bound sandwich violated: {self.omega} <= {self.chi} <= "
                f"{self.greedy_upper}"
            )
        if self.lovasz_certified is not None and self.lovasz_certified > self.chi:
            raise RuntimeError(
                f"certified bound {self.lovasz_certified} exceeds chromatic "
                f"number {self.chi}"
            )


def certified_bound(certificate: ConnectivityCertificate) -> int | None:
    """Exact certified value of conn + 3 when the certificate pins conn:
    3 for certified conn = 0, 2 for a nonempty disconnected complex (conn
    is exactly -1 there), otherwise None."""
    if certificate.certified_conn_zero:
        return 3
    if certificate.nonempty and not certificate.connected:
        return 2
    return None


def compare_bounds(
    g: Graph, cap: int = 2, limit: int = DEFAULT_FACE_BUDGET
) -> BoundReport:
    """Compute every invariant and the connectivity certificate; report
    only, never assert."""
    nc = neighborhood_complex(g)
    certificate = certify_conn_zero(nc, limit)
    if nc.is_empty():
        homology: tuple[HomologyGroup, ...] = ()
        hom_conn: int | str = EMPTY_SENTINEL
    else:
        homology = homology_profile(nc, cap, limit)
        hom_conn = f">={cap}"
        for group in homology:
            if not group.is_trivial():
                hom_conn = group.dimension - 1
                break
    chi, coloring = chromatic_number(g)
    omega, clique = max_clique(g)
    upper, _ = greedy_dsatur_bound(g)
    report = BoundReport(
        chi=chi,
        omega=omega,
        lovasz_certified=certified_bound(certificate),
        greedy_upper=upper,
        flags=certificate.flags,
        homology=homology,
        certificate=certificate,
        homological_connectivity=hom_conn,
        coloring=coloring,
        clique=clique,
    )
    report.validate()
    return report


# ---------------------------------------------------------------------------
# the separation check


@dataclass(frozen=True)
class Clause:
    name: str
    expected: object
    actual: object
    ok: bool


@dataclass(frozen=True)
class CorollaryReport:
    params: CorollaryParams
    built: CorollaryResult
    clauses: tuple[Clause, ...]
    bound: BoundReport
    passed: bool

    def failing_clauses(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.clauses if not c.ok)


def verify_corollary(
    params: CorollaryParams, limit: int = DEFAULT_FACE_BUDGET
) -> CorollaryReport:
    """Build the separation graph and check chi = q, omega = p, planted
    biclique present, certified bound = 3."""
    params.validate()
    built = build_corollary_graph(params)
    bound = compare_bounds(built.graph, cap=1, limit=limit)
    biclique_ok = verify_biclique_certificate(
        built.graph, built.biclique_left, built.biclique_right
    )
    clauses = (
        Clause("chromatic_number", params.q, bound.chi, bound.chi == params.q),
        Clause("clique_number", params.p, bound.omega, bound.omega == params.p),
        Clause("biclique_certificate", True, biclique_ok, biclique_ok),
        Clause(
            "certified_bound",
            3,
            bound.lovasz_certified,
            bound.lovasz_certified == 3,
        ),
    )
    return CorollaryReport(
        params=params,
        built=built,
        clauses=clauses,
        bound=bound,
        passed=all(c.ok for c in clauses),
    )


# ---------------------------------------------------------------------------
# JSON report assembly (stable field names, deterministic content)


def _homology_json(groups) -> list[dict]:
    return [
        {
            "dim": g.dimension,
            "betti": g.betti,
            "torsion": [str(t) for t in g.torsion],
        }
        for g in groups
    ]


def _certificate_json(cert: ConnectivityCertificate) -> dict:
    return {
        "nonempty": cert.nonempty,
        "connected": cert.connected,
        "h1": _homology_json([cert.h1])[0],
        "certified_conn_zero": cert.certified_conn_zero,
        "homological_connectivity": cert.homological_connectivity,
        "flags": list(cert.flags),
    }


def _lovasz_json(certificate: ConnectivityCertificate) -> dict:
    value = certified_bound(certificate)
    return {
        "certified": value is not None,
        "value": value,
        "flags": list(certificate.flags),
    }


def wedge_report_json(
    case: str, spec_names: dict, report: WedgeCheckReport, wall_time_ms: int | None = None
) -> dict:
    g = report.gadget_graph
    return {
        "case": case,
        "params": spec_names,
        "graph_stats": {"n": g.n, "m": g.m},
        "chi": None,
        "omega": None,
        "lovasz": _lovasz_json(report.certificate),
        "homology": [
            {
                "dim": r.dim,
                "betti": r.gadget_betti,
                "torsion": [str(t) for t in r.gadget_torsion],
            }
            for r in report.rows
        ],
        "witnesses": {
            "wedge": [
                {
                    "dim": r.dim,
                    "gadget_betti": r.gadget_betti,
                    "first_betti": r.first_betti,
                    "second_betti": r.second_betti,
                    "expected_betti": r.expected_betti,
                    "expected_torsion": [str(t) for t in r.expected_torsion],
                    "ok": r.ok,
                }
                for r in report.rows
            ],
            "certificate": _certificate_json(report.certificate),
        },
        "pass": report.passed,
        "wall_time_ms": wall_time_ms,
    }


def corollary_report_json(
    report: CorollaryReport, wall_time_ms: int | None = None
) -> dict:
    p = report.params
    g = report.built.graph
    return {
        "case": f"corollary(l={p.l},m={p.m},p={p.p},q={p.q})",
        "params": {"l": p.l, "m": p.m, "p": p.p, "q": p.q},
        "graph_stats": {"n": g.n, "m": g.m},
        "chi": report.bound.chi,
        "omega": report.bound.omega,
        "lovasz": _lovasz_json(report.bound.certificate),
        "homology": _homology_json(report.bound.homology),
        "witnesses": {
            "coloring": list(report.bound.coloring.assignment),
            "clique": list(report.bound.clique.vertices),
            "biclique": {
                "left": list(report.built.biclique_left),
                "right": list(report.built.biclique_right),
            },
            "designated": [report.built.s_first, report.built.s_second],
            "bridge": report.built.z,
            "certificate": _certificate_json(report.bound.certificate),
        },
        "clauses": [
            {
                "clause": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "ok": c.ok,
            }
            for c in report.clauses
        ],
        "pass": report.passed,
        "wall_time_ms": wall_time_ms,
    }


def bounds_report_json(
    case: str, g: Graph, report: BoundReport, wall_time_ms: int | None = None
) -> dict:
    return {
        "case": case,
        "params": {},
        "graph_stats": {"n": g.n, "m": g.m},
        "chi": report.chi,
        "omega": report.omega,
        "lovasz": _lovasz_json(report.certificate),
        "homology": _homology_json(report.homology),
        "witnesses": {
            "coloring": list(report.coloring.assignment),
            "clique": list(report.clique.vertices),
            "greedy_upper": report.greedy_upper,
            "homological_connectivity": report.homological_connectivity,
            "certificate": _certificate_json(report.certificate),
        },
        "pass": True,
        "wall_time_ms": wall_time_ms,
    }


# ---------------------------------------------------------------------------
# the batch suite


SUITE_FAMILIES: tuple[tuple[str, str], ...] = (
    ("K3", "complete:3"),
    ("K4", "complete:4"),
    ("C5", "cycle:5"),
    ("C7", "cycle:7"),
)

CERTIFICATE_CASES: tuple[tuple[str, str], ...] = (
    ("K2", "certified-fails-disconnected"),
    ("K3", "certified"),
    ("K4", "certified-fails-trivial-h1"),
    ("C4", "certified-fails-disconnected"),
    ("C5", "certified"),
)

SUITE_COROLLARY_PARAMS: tuple[tuple[int, int, int, int], ...] = (
    (1, 2, 2, 3),
    (2, 2, 3, 3),
    (2, 3, 3, 4),
)

FULL_COROLLARY_PARAMS = SUITE_COROLLARY_PARAMS + ((2, 2, 3, 5),)


def _named_graph(name: str) -> Graph:
    kind, _, arg = name.partition(":")
    if kind == "complete":
        return complete_graph(int(arg))
    if kind == "cycle":
        return cycle_graph(int(arg))
    raise ValueError(f"unknown suite graph {name!r}")


_NAMED = {
    "K2": "complete:2",
    "K3": "complete:3",
    "K4": "complete:4",
    "C4": "cycle:4",
    "C5": "cycle:5",
    "C7": "cycle:7",
}


def suite_cases(seed: int, full: bool = False) -> list[tuple]:
    """Deterministic, picklable case descriptors.  Base points: vertex 0
    for every pair plus one seeded random pair each."""
    rng = random.Random(seed)
    cases: list[tuple] = []
    for i, (name_h, spec_h) in enumerate(SUITE_FAMILIES):
        for name_k, spec_k in SUITE_FAMILIES[i:]:
            cap = 3 if "K4" in (name_h, name_k) else 2
            h = _named_graph(spec_h)
            k = _named_graph(spec_k)
            rx, ry = rng.randrange(h.n), rng.randrange(k.n)
            cases.append(("theorem2", name_h, 0, name_k, 0, cap))
            cases.append(("theorem2", name_h, rx, name_k, ry, cap))
    for name, expectation in CERTIFICATE_CASES:
        cases.append(("certificate", name, expectation))
    for params in FULL_COROLLARY_PARAMS if full else SUITE_COROLLARY_PARAMS:
        cases.append(("corollary",) + params)
    return cases


def run_suite_case(case: tuple, limit: int = DEFAULT_FACE_BUDGET) -> dict:
    kind = case[0]
    if kind == "theorem2":
        _, name_h, x, name_k, y, cap = case
        spec = GadgetSpec(
            h=_named_graph(_NAMED[name_h]), x=x, k=_named_graph(_NAMED[name_k]), y=y
        )
        report = verify_wedge_decomposition(spec, cap=cap, limit=limit)
        key = f"theorem2(h={name_h},x={x},k={name_k},y={y})"
        return wedge_report_json(
            key,
            {"h": name_h, "x": x, "k": name_k, "y": y, "max_dim": cap},
            report,
        )
    if kind == "certificate":
        _, name, expectation = case
        g = _named_graph(_NAMED[name])
        cert = certify_conn_zero(neighborhood_complex(g), limit)
        if expectation == "certified":
            ok = cert.certified_conn_zero
        elif expectation == "certified-fails-disconnected":
            ok = not cert.certified_conn_zero and not cert.connected
        else:  # certified-fails-trivial-h1
            ok = (
                not cert.certified_conn_zero
                and cert.connected
                and cert.h1.is_trivial()
                and FLAG_NO_CERTIFICATE in cert.flags
            )
        return {
            "case": f"certificate({name})",
            "params": {"graph": name, "expect": expectation},
            "graph_stats": {"n": g.n, "m": g.m},
            "chi": None,
            "omega": None,
            "lovasz": _lovasz_json(cert),
            "homology": _homology_json([cert.h1]),
            "witnesses": {"certificate": _certificate_json(cert)},
            "pass": ok,
            "wall_time_ms": None,
        }
    if kind == "corollary":
        _, l, m, p, q = case
        report = verify_corollary(CorollaryParams(l, m, p, q), limit)
        return corollary_report_json(report)
    raise ValueError(f"unknown case kind {kind!r}")


def run_suite(
    seed: int = 0,
    full: bool = False,
    limit: int = DEFAULT_FACE_BUDGET,
    jobs: int = 1,
) -> dict:
    """Run every suite case; the result dict is deterministic for a given
    seed (cases sorted by key, no wall-clock fields)."""
    cases = suite_cases(seed, full)
    if jobs > 1:
        runner = functools.partial(run_suite_case, limit=limit)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(runner, cases))
    else:
        reports = [run_suite_case(case, limit) for case in cases]
    reports.sort(key=lambda r: r["case"])
    return {
        "seed": seed,
        "cases": reports,
        "pass": all(r["pass"] for r in reports),
    }
