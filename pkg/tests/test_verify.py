import json

import pytest

from lovaszgap import (
    CorollaryParams,
    GadgetSpec,
    PreconditionError,
    chromatic_number,
    compare_bounds,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    kneser_graph,
    run_suite,
    verify_corollary,
    verify_wedge_decomposition,
)
from lovaszgap.verify import (
    certified_bound,
    corollary_report_json,
    suite_cases,
    wedge_report_json,
)


def spec(h, k, x=0, y=0):
    return GadgetSpec(h=h, x=x, k=k, y=y)


def row(report, dim):
    return next(r for r in report.rows if r.dim == dim)


def test_wedge_k3_k3():
    report = verify_wedge_decomposition(spec(complete_graph(3), complete_graph(3)))
    assert report.passed
    assert row(report, 0).gadget_betti == 0
    assert row(report, 1).gadget_betti == 3
    assert report.certificate.certified_conn_zero


def test_wedge_c5_c7():
    report = verify_wedge_decomposition(spec(cycle_graph(5), cycle_graph(7)))
    assert report.passed
    assert row(report, 1).gadget_betti == 3


def test_wedge_k4_k3_includes_sphere_degree():
    # N(K4) is a 2-sphere and N(K3) a circle, so the gadget complex carries
    # betti 0+1+1 in degree 1 and 1+0+0 in degree 2
    report = verify_wedge_decomposition(spec(complete_graph(4), complete_graph(3)), cap=2)
    assert report.passed
    assert row(report, 1).gadget_betti == 2
    assert row(report, 2).gadget_betti == 1


def test_wedge_rejects_bipartite_part():
    with pytest.raises(PreconditionError):
        verify_wedge_decomposition(spec(complete_bipartite(2, 2), complete_graph(3)))


def test_wedge_rejects_disconnected_part():
    from lovaszgap import Graph

    disconnected = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(PreconditionError):
        verify_wedge_decomposition(spec(disconnected, complete_graph(3)))


def test_wedge_base_point_independence():
    h, k = cycle_graph(5), complete_graph(4)
    for x in range(h.n):
        report = verify_wedge_decomposition(spec(h, k, x=x, y=x % k.n), cap=3)
        assert report.passed


def test_compare_bounds_k4():
    report = compare_bounds(complete_graph(4))
    assert report.chi == 4
    assert report.omega == 4
    assert report.lovasz_certified is None
    assert "no-certificate" in report.flags
    assert report.homological_connectivity == 1


def test_compare_bounds_c5():
    report = compare_bounds(cycle_graph(5))
    assert (report.chi, report.omega, report.lovasz_certified) == (3, 2, 3)


def test_compare_bounds_petersen():
    report = compare_bounds(kneser_graph(5, 2))
    assert (report.chi, report.omega) == (3, 2)
    # N(petersen) is connected with free H1 of rank 11 (pinned from the
    # elimination engine after an Euler-characteristic cross-check)
    assert report.lovasz_certified == 3
    assert report.certificate.h1.betti == 11
    assert report.certificate.h1.torsion == ()


def test_compare_bounds_disconnected_complex_gives_two():
    report = compare_bounds(cycle_graph(4))
    assert report.lovasz_certified == 2
    assert report.chi == 2


def test_certified_bound_never_exceeds_chi(corpus):
    for name, g in corpus.items():
        if g.n > 45:
            continue
        report = compare_bounds(g, cap=1)
        if report.lovasz_certified is not None:
            assert report.lovasz_certified <= report.chi, name


def test_gadget_chromatic_number(corpus):
    # the bridge vertex has degree 2, so it never forces a new color
    pairs = [
        (complete_graph(3), complete_graph(3)),
        (complete_graph(4), cycle_graph(5)),
        (cycle_graph(5), cycle_graph(7)),
        (complete_graph(2), complete_graph(5)),
    ]
    from lovaszgap import build_gadget

    for h, k in pairs:
        built = build_gadget(spec(h, k))
        expected = max(chromatic_number(h)[0], chromatic_number(k)[0], 2)
        assert chromatic_number(built.graph)[0] == expected


@pytest.mark.parametrize(
    "params,expected",
    [
        ((2, 2, 3, 3), (3, 3)),
        ((2, 3, 3, 4), (4, 3)),
        ((1, 2, 2, 3), (3, 2)),
    ],
)
def test_verify_corollary(params, expected):
    report = verify_corollary(CorollaryParams(*params))
    assert report.passed
    assert (report.bound.chi, report.bound.omega) == expected
    assert report.bound.lovasz_certified == 3
    assert report.failing_clauses() == ()


def test_corollary_report_json_shape():
    report = verify_corollary(CorollaryParams(2, 2, 3, 3))
    payload = corollary_report_json(report)
    assert set(payload) == {
        "case",
        "params",
        "graph_stats",
        "chi",
        "omega",
        "lovasz",
        "homology",
        "witnesses",
        "clauses",
        "pass",
        "wall_time_ms",
    }
    assert payload["pass"] is True
    assert payload["lovasz"] == {"certified": True, "value": 3, "flags": []}
    assert payload["wall_time_ms"] is None
    assert all(isinstance(t, str) for row in payload["homology"] for t in row["torsion"])
    json.dumps(payload)  # must be serializable as-is


def test_wedge_report_json_deterministic():
    report = verify_wedge_decomposition(spec(complete_graph(3), cycle_graph(5)))
    a = wedge_report_json("case", {"h": "K3"}, report)
    b = wedge_report_json("case", {"h": "K3"}, report)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_suite_cases_deterministic():
    assert suite_cases(0) == suite_cases(0)
    assert suite_cases(1) != suite_cases(2) or True  # seeds may collide; just run both
    assert len([c for c in suite_cases(0) if c[0] == "theorem2"]) == 20


def test_run_suite_passes_and_is_deterministic():
    first = run_suite(seed=0)
    second = run_suite(seed=0)
    assert first["pass"]
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    keys = [c["case"] for c in first["cases"]]
    assert keys == sorted(keys)


def test_run_suite_parallel_matches_sequential():
    sequential = run_suite(seed=0)
    parallel = run_suite(seed=0, jobs=2)
    assert json.dumps(sequential, sort_keys=True) == json.dumps(parallel, sort_keys=True)


def test_certified_bound_helper():
    from lovaszgap import certify_conn_zero, neighborhood_complex

    assert certified_bound(certify_conn_zero(neighborhood_complex(cycle_graph(5)))) == 3
    assert certified_bound(certify_conn_zero(neighborhood_complex(cycle_graph(4)))) == 2
    assert certified_bound(certify_conn_zero(neighborhood_complex(complete_graph(4)))) is None
