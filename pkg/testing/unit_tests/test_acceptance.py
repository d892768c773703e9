"""
Full enumeration runs. They take minutes, so the default pytest run deselects them:

    pytest -m acceptance
"""

import os

import pytest

from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.oracle import enumerate_graphs, enumerate_and_verify, verify_graphs
from dual_graph_cycles import formulas
from testing.unit_tests._graphs import chain, d_graph, e_graph

pytestmark = pytest.mark.acceptance

WORKERS = os.cpu_count() or 1

ORACLES = ["oracle-fundamental", "oracle-minimal-model", "oracle-tyurina"]

# Only the tail and template statements are allowed to fail, and only on graphs with a double edge.
ADVISORY_ON_MULTIPLE_EDGES = {"yau-tail", "classification", "classification-tables", "branch-negativity"}


def _ade_cases():
    for n in range(1, 11):
        yield pytest.param(chain(n), (1,) * n, id=f"A{n}")
    for n in range(4, 11):
        yield pytest.param(d_graph(n), (1,) + (2,) * (n - 3) + (1, 1), id=f"D{n}")
    yield pytest.param(e_graph(6), (1, 2, 3, 2, 1, 2), id="E6")
    yield pytest.param(e_graph(7), (2, 3, 4, 3, 2, 1, 2), id="E7")
    yield pytest.param(e_graph(8), (2, 4, 6, 5, 4, 3, 2, 3), id="E8")


@pytest.mark.parametrize("graph, expected", list(_ade_cases()))
def test_ade_fundamental_cycles(graph, expected):
    z, _ = fundamental_cycle(graph)

    assert tuple(z) == expected
    assert formulas.chi(graph, z) == 1
    assert graph.matrix.bilinear(z, z) == -2


def test_oracles_agree_up_to_five_vertices():
    graphs = enumerate_graphs(5, [-2, -3, -4], [0, 1, 2])
    summary = verify_graphs(graphs, ORACLES, workers=WORKERS)

    assert summary.errors == []
    assert summary.failures == []
    assert all(summary.counts[name]["pass"] > 0 for name in ORACLES)


def test_special_enumeration_up_to_eight_vertices():
    summary = enumerate_and_verify(8, [-1, -2, -3, -4], [0, 1, 2], workers=WORKERS)

    assert summary.errors == []
    assert summary.ok

    for failure in summary.failures:
        report = failure["report"]
        assert report["advisory"]
        if report["check"] in ADVISORY_ON_MULTIPLE_EDGES:
            assert report["notes"]["multiple edge"] is True
        else:
            assert report["check"] == "canonical-general"

    for name in ["yau-genus-identity", "canonical-degree-two", "canonical-degree-one", "genus-degree-one",
                 "genus-degree-two", "classification", "classification-tables"]:
        assert summary.counts[name]["pass"] > 0
