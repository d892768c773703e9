import itertools
from fractions import Fraction

import networkx as nx
import pytest

from dual_graph_cycles.lattice import Cycle, VertexData, check_negative_definite
from dual_graph_cycles.graph_io import to_text
from dual_graph_cycles.oracle import TheoremReport, plain, anti_nef_minimum, minimal_model_by_search, \
    tyurina_by_search, pa_max_exhaustive, pa_max, GraphFacts, run_checks, check_canonical_theorems, \
    verify_theorem_B, verify_theorem_C, summarize, labelled_branches, special_graphs, enumerate_graphs, \
    EnumerationSummary, verify_graphs, enumerate_and_verify
from dual_graph_cycles.exceptions import InputError, ResourceLimitError
from testing.unit_tests._graphs import chain, e_graph, b1ab2, degree_one, single, double_edge_counterexample


def _same_curve(a, b):
    return (a["weight"], a["genus"]) == (b["weight"], b["genus"])


def _same_multiplicity(a, b):
    return a["multiplicity"] == b["multiplicity"]


class TestBruteForce:
    def test_anti_nef_minimum(self):
        assert anti_nef_minimum(e_graph(6), 3) == Cycle((1, 2, 3, 2, 1, 2))
        assert anti_nef_minimum(chain(3), 1) == Cycle((1, 1, 1))

    def test_box_cap(self):
        with pytest.raises(ResourceLimitError):
            anti_nef_minimum(e_graph(8), 6, cap=100)

    def test_minimal_model_and_tyurina(self):
        graph = b1ab2()
        z = Cycle((1, 1, 1))

        assert minimal_model_by_search(graph, z) == Cycle((1, 0, 0))
        assert tyurina_by_search(graph, z) == Cycle((1, 0, 0))
        assert tyurina_by_search(graph, Cycle((1, 0, 0))) is None

    def test_exhaustive_maximum(self):
        assert pa_max_exhaustive(single(-2, genus=2), 6) == (2, Cycle((1,)))


class TestPaMax:
    @pytest.mark.parametrize("graph, value, maximizer", [
        (single(-2, genus=2), 2, (1,)),
        (single(-1, genus=1), 1, (1,)),
        (b1ab2(), 1, (1, 0, 0)),
        (degree_one(), 1, (1, 0)),
        (chain(3), 0, (0, 0, 1)),
    ])
    def test_known_maxima(self, graph, value, maximizer):
        result = pa_max(graph)

        assert result.value == value
        assert result.maximizer == Cycle(maximizer)
        assert result.boundary_clear

    def test_agrees_with_exhaustive_search(self):
        for graph in enumerate_graphs(3, [-2, -3], [0, 1], max_multiplicity=1):
            result = pa_max(graph)
            value, maximizer = pa_max_exhaustive(graph, 6)

            assert value <= result.value
            if max(result.maximizer) <= 6:
                assert (value, maximizer) == (result.value, result.maximizer)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            pa_max(b1ab2(), initial_bound=8, cap=4)

    def test_bad_bound(self):
        with pytest.raises(InputError):
            pa_max(b1ab2(), initial_bound=0)


class TestReports:
    def test_plain(self):
        assert plain({"z": Cycle((1, 2)), "s": frozenset({2, 1}), "n": None}) == {"z": [1, 2], "s": [1, 2], "n": None}

    def test_unknown_verdict(self):
        with pytest.raises(ValueError):
            TheoremReport("x", [], verdict="maybe")

    def test_lazy_hypotheses(self):
        def never():
            raise AssertionError("evaluated past a failing hypothesis")

        report = TheoremReport.evaluate("x", [("false", lambda: False), ("never", never)], never, never)

        assert report.verdict == "not-applicable"
        assert report.hypotheses == [("false", False)]
        assert not report.blocking

    def test_advisory_failure_is_not_blocking(self):
        report = TheoremReport.evaluate("x", [], lambda: 1, lambda: 2, advisory=True)

        assert report.verdict == "fail"
        assert not report.blocking


B1AB2_VERDICTS = {
    "canonical-degree-two": "pass",
    "genus-degree-one": "not-applicable",
    "genus-degree-two": "pass",
    "canonical-degree-one": "not-applicable",
    "canonical-general": "pass",
    "classification": "pass",
    "classification-tables": "pass",
    "elliptic-canonical": "pass",
    "genus-lower-bound": "not-applicable",
    "genus-multiple-of-z": "not-applicable",
    "yau-genus-identity": "pass",
    "yau-tail": "pass",
    "yau-self-intersection": "pass",
    "branch-negativity": "pass",
    "oracle-fundamental": "pass",
    "oracle-minimal-model": "pass",
    "oracle-tyurina": "pass",
}


class TestChecks:
    def test_every_check_on_a_two_step_graph(self):
        assert summarize(run_checks(b1ab2())) == B1AB2_VERDICTS

    def test_rational_graph(self):
        verdicts = summarize(run_checks(chain(3)))

        assert verdicts.pop("oracle-fundamental") == "pass"
        assert set(verdicts.values()) == {"not-applicable"}

    def test_order_and_selection(self):
        reports = run_checks(b1ab2(), ["yau-tail", "classification"])

        assert [report.check for report in reports] == ["yau-tail", "classification"]

    def test_unknown_check(self):
        with pytest.raises(ValueError):
            run_checks(b1ab2(), ["no-such-check"])

    def test_degree_two_genus(self):
        report = verify_theorem_C(b1ab2())

        assert report.verdict == "pass"
        assert report.predicted == report.computed == 1
        assert report.notes == {"geometric genus bound": 2, "best multiple of Y": 1}

    @pytest.mark.parametrize("graph, genus", [(degree_one(), 1), (single(-1, genus=1), 1), (single(-1, genus=2), 2)])
    def test_degree_one_genus(self, graph, genus):
        report = verify_theorem_B(graph)

        assert report.verdict == "pass"
        assert report.computed == genus

    def test_degree_one_not_applicable_on_degree_two(self):
        assert verify_theorem_B(b1ab2()).verdict == "not-applicable"

    def test_canonical_checks(self):
        verdicts = summarize(check_canonical_theorems(degree_one()))

        assert verdicts == {"elliptic-canonical": "pass", "canonical-degree-one": "pass",
                            "canonical-degree-two": "not-applicable", "canonical-general": "pass"}

    def test_shared_facts(self):
        facts = GraphFacts(b1ab2())

        run_checks(b1ab2(), ["genus-degree-two"], facts=facts)
        assert facts.pa_max.value == 1
        assert facts.best_multiple == (1, 1)
        assert facts.multiple_of_yau(2) == Cycle((4, 2, 2))

    def test_tyurina_oracle_covers_every_step(self):
        report = run_checks(b1ab2(), ["oracle-tyurina"])[0]

        assert report.verdict == "pass"
        assert report.predicted == [Cycle((1, 0, 0)), None]

    def test_tyurina_oracle_on_a_one_step_sequence(self):
        report = run_checks(single(-1, genus=1), ["oracle-tyurina"])[0]

        assert report.verdict == "pass"
        assert report.predicted == report.computed == [None]

    def test_tyurina_oracle_catches_a_wrong_step(self):
        facts = GraphFacts(b1ab2())
        facts.yau.sequence[1] = Cycle((1, 1, 0))

        report = run_checks(b1ab2(), ["oracle-tyurina"], facts=facts)[0]

        assert report.verdict == "fail"
        assert report.blocking

    def test_oracles_agree_on_small_graphs(self):
        names = ["oracle-fundamental", "oracle-minimal-model", "oracle-tyurina"]

        for graph in enumerate_graphs(3, [-2, -3], [0, 1], max_multiplicity=1):
            assert "fail" not in summarize(run_checks(graph, names)).values()


class TestEnumeration:
    @pytest.mark.parametrize("size, count", [(1, 2), (2, 5)])
    def test_labelled_branches(self, size, count):
        assert len(labelled_branches(size)) == count

    def test_special_graphs(self):
        graphs = list(special_graphs(3, [-2], [1]))
        shapes = sorted((len(graph), graph.edges) for graph in graphs)

        assert len(graphs) == 4
        assert all(graph.vertices[0].name == "A" for graph in graphs)
        assert (3, ((0, 1, 1), (0, 2, 1))) in shapes

    def test_pruning_keeps_every_definite_graph(self):
        from dual_graph_cycles.oracle._enumeration import _branch_multisets, _build_special_graph

        specials = [VertexData(weight, 1, name="A") for weight in (-1, -2, -3)]
        unpruned = sum(1 for n in range(1, 6) for branches, _ in _branch_multisets(n - 1) for special in specials
                       if check_negative_definite(_build_special_graph(special, branches)))
        pruned = list(special_graphs(5, [-1, -2, -3], [1]))

        assert len(pruned) == unpruned
        assert all(check_negative_definite(graph) for graph in pruned)

    def test_branch_costs(self):
        from dual_graph_cycles.oracle._enumeration import _costed_branches

        costs = {labels: cost for _, _, labels, cost in _costed_branches(1)}

        assert costs == {(1,): Fraction(1, 2), (2,): Fraction(2)}

    def test_rational_special_vertices_are_skipped(self):
        assert list(special_graphs(1, [-1, -2], [0])) == []

    @pytest.mark.parametrize("arguments", [(9, [-2], [1]), (0, [-2], [1]), (3, [-7], [1]), (3, [-2], [-1])])
    def test_bad_arguments(self, arguments):
        with pytest.raises(InputError):
            list(special_graphs(*arguments))

    def test_enumerate_graphs(self):
        assert len(list(enumerate_graphs(1, [-2, -3], [0]))) == 2
        assert len(list(enumerate_graphs(2, [-2], [0]))) == 2

        with pytest.raises(InputError):
            list(enumerate_graphs(8, [-2], [0]))

    def test_small_enumeration_passes(self):
        summary = enumerate_and_verify(3, [-2], [1])

        assert summary.graph_count == 4
        assert summary.ok
        assert summary.counts["genus-degree-two"]["pass"] >= 2

    def test_degree_one_enumeration_passes(self):
        summary = enumerate_and_verify(1, [-1], [1, 2])

        assert summary.graph_count == 2
        assert summary.ok
        assert summary.counts["genus-degree-one"] == {"pass": 2, "fail": 0, "not-applicable": 0}

    def test_general_graphs_are_definite_and_distinct(self):
        graphs = list(enumerate_graphs(3, [-2, -3], [0, 1]))
        encodings = {to_text(graph) for graph in graphs}

        assert all(check_negative_definite(graph) for graph in graphs)
        assert len(encodings) == len(graphs)
        assert not any(nx.is_isomorphic(a.to_networkx(), b.to_networkx(), node_match=_same_curve,
                                        edge_match=_same_multiplicity)
                       for a, b in itertools.combinations(graphs, 2))

    def test_summary_records_failures(self):
        summary = EnumerationSummary()
        failing = TheoremReport("genus-degree-two", [], 2, 1, "fail").to_dict()
        advisory = TheoremReport("canonical-general", [], 2, 1, "fail", advisory=True).to_dict()

        summary.add("vertex A weight=-2 genus=1\n", [failing, advisory])
        summary.add("vertex A weight=-3\n", [], "DomainError: boom")

        assert summary.graph_count == 2
        assert len(summary.blocking_failures) == 1
        assert not summary.ok
        assert summary.to_dict()["errors"] == [{"graph": "vertex A weight=-3\n", "error": "DomainError: boom"}]

    def test_reproducers(self, tmp_path):
        summary = verify_graphs([b1ab2()], ["genus-degree-two"], reproducers=str(tmp_path))

        assert summary.ok
        assert summary.reproducers == []

    def test_empty_run_warns(self):
        with pytest.warns(UserWarning):
            summary = verify_graphs([])

        assert summary.graph_count == 0


class TestDoubleEdgeCounterexample:
    """A degree two graph with a double edge where D_m misses part of Z at the special vertex."""

    def test_invariants(self):
        facts = GraphFacts(double_edge_counterexample())

        assert facts.z == Cycle((2, 2, 3))
        assert (facts.z_squared, facts.p_f, facts.minimal) == (-2, 1, True)
        assert facts.yau.sequence == [Cycle((2, 2, 3)), Cycle((1, 0, 1))]
        assert facts.yau.z_min == Cycle((1, 0, 1))
        assert facts.essentially_irreducible()
        assert facts.multiple_edge

    def test_tail_and_classification_fail_as_advisory(self):
        reports = {report.check: report for report in
                   run_checks(double_edge_counterexample(), ["yau-tail", "classification"])}

        for report in reports.values():
            assert report.verdict == "fail"
            assert report.advisory
            assert not report.blocking
            assert report.notes["multiple edge"] is True

        assert reports["yau-tail"].notes["Z - D_m"] == Cycle((1, 2, 2))
        assert reports["classification"].computed in ("unmatched", "ambiguous")

    def test_self_intersection_needs_a_minus_two_tail(self):
        report = run_checks(double_edge_counterexample(), ["yau-self-intersection"])[0]

        assert report.verdict == "not-applicable"
        assert report.hypotheses[-1] == ("Z - D_m consists of (-2)-curves", False)

    def test_canonical_cycle_still_matches(self):
        report = run_checks(double_edge_counterexample(), ["canonical-degree-two", "yau-genus-identity"])

        assert summarize(report) == {"canonical-degree-two": "pass", "yau-genus-identity": "pass"}
        assert report[0].computed == Cycle((3, 2, 4))

    def test_failure_logs_the_graph(self, caplog):
        with caplog.at_level("WARNING", logger="dual_graph_cycles.oracle._theorems"):
            run_checks(double_edge_counterexample(), ["yau-tail"])

        assert "yau-tail (advisory) failed" in caplog.text
        assert "edge A B2 mult=2" in caplog.text

    def test_simple_edges_stay_blocking(self):
        assert not GraphFacts(b1ab2()).multiple_edge
        assert not run_checks(b1ab2(), ["yau-tail"])[0].advisory
