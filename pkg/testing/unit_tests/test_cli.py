import json

import pytest

from dual_graph_cycles.cli import main, build_parser, THEOREM_ALIASES
from dual_graph_cycles.oracle import CHECKS
from dual_graph_cycles.exceptions import InvariantError
from testing.unit_tests._graphs import fixture


def test_aliases_name_real_checks():
    assert set(THEOREM_ALIASES.values()) <= set(CHECKS)


def test_fundamental(capsys):
    assert main(["fundamental", fixture("e8.graph")]) == 0

    out = capsys.readouterr().out
    assert "fundamental_cycle: 2 4 6 5 4 3 2 3\n" in out
    assert "layout: 2 4 6 5 4 3 2 | branch 3\n" in out
    assert "fundamental_genus: 0\n" in out


@pytest.mark.parametrize("name, layout", [
    ("d4.graph", {"chain": [1, 2, 1], "branch": [1]}),
    ("e6.graph", {"chain": [1, 2, 3, 2, 1], "branch": [2]}),
    ("e7.graph", {"chain": [2, 3, 4, 3, 2, 1], "branch": [2]}),
    ("e8.graph", {"chain": [2, 4, 6, 5, 4, 3, 2], "branch": [3]}),
])
def test_fundamental_layout(capsys, name, layout):
    assert main(["fundamental", "--json", fixture(name)]) == 0

    assert json.loads(capsys.readouterr().out)["layout"] == layout


@pytest.mark.parametrize("name", ["a3.graph", "b1ab2.graph", "double_edge.graph"])
def test_no_layout_without_a_trivalent_vertex(capsys, name):
    assert main(["fundamental", "--json", fixture(name)]) == 0

    assert "layout" not in json.loads(capsys.readouterr().out)


def test_options_after_the_graph(capsys):
    assert main(["yau", fixture("b1ab2.graph"), "--json"]) == 0

    assert json.loads(capsys.readouterr().out)["yau_cycle"] == [2, 1, 1]


def test_genus_with_cycle(capsys):
    assert main(["genus", "--json", "--cycle", "2,2,2", fixture("b1ab2.graph")]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["cycle_genus"] == -1
    assert document["chain_connected"] is False
    assert "cycle_minimal_model" not in document
    assert document["decomposition"] == ["2 x (1 1 1)"]


def test_verify_alias(capsys):
    assert main(["verify", "--json", "--theorem", "C", fixture("b1ab2.graph")]) == 0

    checks = json.loads(capsys.readouterr().out)["checks"]
    assert [check["check"] for check in checks] == ["genus-degree-two"]
    assert checks[0]["verdict"] == "pass"
    assert checks[0]["computed"] == 1


def test_verify_text(capsys):
    assert main(["verify", "--theorem", "B", fixture("degree_one.graph")]) == 0

    assert "check genus-degree-one: pass\n" in capsys.readouterr().out


def test_yau(capsys):
    assert main(["yau", "--json", fixture("b1ab2.graph")]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["sequence"] == [[1, 1, 1], [1, 0, 0]]
    assert document["yau_cycle"] == [2, 1, 1]
    assert document["best_multiple"] == 1


def test_canonical(capsys):
    assert main(["canonical", "--json", fixture("b1ab2.graph")]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["canonical_cycle"] == [2, 1, 1]
    assert document["ratio_to_yau_cycle"] == 1


def test_classify(capsys):
    assert main(["classify", "--json", fixture("b1ab2.graph")]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["special_vertex"] == "A"
    assert document["case"] == 1
    assert document["admissible"] is True


def test_pa_max(capsys):
    assert main(["pa-max", fixture("genus_two_vertex.graph")]) == 0

    out = capsys.readouterr().out
    assert "value: 2\n" in out
    assert "maximizer: 1\n" in out


def test_enumerate(capsys):
    assert main(["enumerate", "--json", "--max-vertices", "3", "--weights", "-2", "--genera", "1"]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["graphs"] == 4
    assert document["failures"] == []


@pytest.mark.parametrize("argv, message", [
    (["fundamental", fixture("empty.graph")], "error: line 1, column 1: "),
    (["fundamental", fixture("not_negative_definite.graph")], "error: "),
    (["fundamental", fixture("no_such_file.graph")], "error: "),
    (["yau", fixture("e8.graph")], "error: "),
])
def test_bad_input(capsys, argv, message):
    assert main(argv) == 2

    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith(message)


def test_unknown_theorem():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["verify", "--theorem", "Z", "x.graph"])

    assert info.value.code == 2


@pytest.mark.parametrize("argv", [["fundamental"], ["verify", "--theorem", "C"], ["enumerate", "x.graph"], []])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)

    assert info.value.code == 2
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("alias, check, name", [
    ("3.2", "canonical-degree-one", "degree_one.graph"),
    ("3.6", "canonical-general", "b1ab2.graph"),
    ("3.8", "classification", "b1ab2.graph"),
    ("3.9", "classification-tables", "b1ab2.graph"),
])
def test_numbered_aliases(capsys, alias, check, name):
    assert main(["verify", "--json", "--theorem", alias, fixture(name)]) == 0

    checks = json.loads(capsys.readouterr().out)["checks"]
    assert [(item["check"], item["verdict"]) for item in checks] == [(check, "pass")]


def test_invariant_violation(capsys, monkeypatch):
    import dual_graph_cycles.cli as cli

    def broken(graph):
        raise InvariantError("Z . E_v > 0 after the computation sequence")

    monkeypatch.setattr(cli, "fundamental_cycle", broken)

    assert main(["fundamental", fixture("e8.graph")]) == 3

    captured = capsys.readouterr()
    assert captured.out == ""
    assert "internal error: Z . E_v > 0 after the computation sequence" in captured.err
