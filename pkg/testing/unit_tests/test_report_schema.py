import json

import jsonschema
import pytest

from dual_graph_cycles.cli import main
from dual_graph_cycles.reports import report_schema
from testing.unit_tests._graphs import fixture

GRAPH_COMMANDS = [
    ["fundamental"],
    ["genus"],
    ["genus", "--cycle", "2,1,1"],
    ["yau"],
    ["canonical"],
    ["classify"],
    ["pa-max"],
    ["verify"],
]

GRAPH_FILES = ["b1ab2.graph", "degree_one.graph", "double_edge.graph", "e8.graph", "d4.graph"]


@pytest.fixture(scope="module")
def validator():
    schema = report_schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


@pytest.mark.parametrize("command", GRAPH_COMMANDS, ids=lambda command: " ".join(command))
@pytest.mark.parametrize("name", GRAPH_FILES)
def test_graph_commands(capsys, validator, command, name):
    if "--cycle" in command and name != "b1ab2.graph":
        pytest.skip("the cycle has three coefficients")

    code, out = _run(capsys, command + ["--json", fixture(name)])

    if code == 2:
        assert out == ""
        return

    validator.validate(json.loads(out))


def test_every_command_on_an_elliptic_graph(capsys, validator):
    for command in GRAPH_COMMANDS:
        code, out = _run(capsys, command + ["--json", fixture("b1ab2.graph")])

        assert code == 0
        validator.validate(json.loads(out))


def test_enumerate(capsys, validator):
    code, out = _run(capsys, ["enumerate", "--json", "--max-vertices", "3", "--weights", "-2", "--genera", "1"])

    assert code == 0
    validator.validate(json.loads(out))


def test_unknown_fields_are_rejected(validator):
    document = {"command": "pa-max", "graph": "x.graph", "value": 1, "maximizer": [1], "box_bound": 2,
                "boundary_clear": True}
    validator.validate(document)

    with pytest.raises(jsonschema.ValidationError):
        validator.validate(dict(document, layout={"chain": [1], "branch": [1]}))

    with pytest.raises(jsonschema.ValidationError):
        validator.validate(dict(document, colour=1))
