import pytest

from dual_graph_cycles.lattice import VertexData
from dual_graph_cycles.graph_io import parse_string, parse_file, to_text, to_json
from dual_graph_cycles.graph_io.debug_methods import to_dot
from dual_graph_cycles.exceptions import GraphSyntaxError, DomainError
from testing.unit_tests._graphs import fixture, b1ab2

B1AB2_TEXT = """\
vertex A weight=-2 genus=1
vertex B1 weight=-2
vertex B2 weight=-2
edge A B1
edge A B2
"""


class TestTextFormat:
    def test_parse(self):
        graph = parse_string(B1AB2_TEXT)

        assert graph.names() == ["A", "B1", "B2"]
        assert graph.vertices[0] == VertexData(-2, 1, name="A")
        assert graph.edges == ((0, 1, 1), (0, 2, 1))

    def test_separators_and_comments(self):
        graph = parse_string("# A_2\nvertex P weight=-2 ; vertex Q weight=-2  # second\nedge P Q mult=1\n")

        assert graph.names() == ["P", "Q"]
        assert len(graph.edges) == 1

    def test_repeated_edges_add_up(self):
        graph = parse_string("vertex A weight=-3 genus=1\nvertex B weight=-2\nedge A B\nedge B A\n")

        assert graph.multiplicity(0, 1) == 2

    @pytest.mark.parametrize("text, line, column", [
        ("", 1, 1),
        ("# nothing\n\n", 1, 1),
        ("vertex A weight=-2 colour=3\n", 1, 20),
        ("vertex A weight=x\n", 1, 17),
        ("vertex A genus=1\n", 1, 1),
        ("vertex A weight=-2 weight=-3\n", 1, 20),
        ("vertex A weight=-2\nvertex A weight=-3\n", 2, 8),
        ("vertex A weight=-2\nvertex B weight=-2\nedge A C\n", 3, 8),
        ("vertex A weight=-2\n  edge A A\n", 2, 3),
        ("vertex A weight=-2\nvertex B weight=-2\nedge A B mult=0\n", 3, 1),
        ("vertex A weight=0\n", 1, 1),
        ("node A weight=-2\n", 1, 1),
    ])
    def test_syntax_errors(self, text, line, column):
        with pytest.raises(GraphSyntaxError) as info:
            parse_string(text)

        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"line {line}, column {column}: ")

    def test_not_negative_definite(self):
        text = "vertex A weight=-1\nvertex B weight=-1\nedge A B\n"

        with pytest.raises(DomainError):
            parse_string(text)

        assert len(parse_string(text, check=False)) == 2


class TestJsonFormat:
    def test_parse(self):
        graph = parse_file(fixture("b1ab2_json.json"))

        assert graph.names() == ["A", "B1", "B2"]
        assert graph.edges == ((0, 1, 1), (0, 2, 1))

    def test_unknown_key(self):
        text = '{"vertices": [{"name": "A", "weight": -2, "colour": 1}]}'

        with pytest.raises(GraphSyntaxError) as info:
            parse_string(text)

        assert (info.value.line, info.value.column) == (1, text.index('"colour"') + 1)

    def test_invalid_json(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_string('{"vertices": [\n  {"name": "A",}\n]}')

        assert info.value.line == 2

    def test_unknown_vertex(self):
        with pytest.raises(GraphSyntaxError):
            parse_string('{"vertices": [{"name": "A", "weight": -2}], "edges": [{"ends": ["A", "B"]}]}')

    @pytest.mark.parametrize("ends", ['[["A"], "A"]', '[{"name": "A"}, "B"]', '[1, "B"]', '[null, "A"]'])
    def test_non_string_ends(self, ends):
        text = '{"vertices": [{"name": "A", "weight": -2}, {"name": "B", "weight": -2}], "edges": [{"ends": %s}]}' % ends

        with pytest.raises(GraphSyntaxError) as info:
            parse_string(text)

        assert (info.value.line, info.value.column) == (1, text.index('"ends"') + 1)


class TestWriters:
    def test_to_text(self):
        assert to_text(b1ab2()) == B1AB2_TEXT

    def test_text_and_json_agree(self):
        graph = parse_string(B1AB2_TEXT)
        again = parse_string(to_json(graph))

        assert again.vertices == graph.vertices
        assert again.edges == graph.edges

    def test_file_and_text_agree(self):
        assert to_text(parse_file(fixture("b1ab2.graph"))) == B1AB2_TEXT

    def test_dot(self):
        dot = to_dot(b1ab2(), highlight={1})

        assert dot.startswith('graph "dual_graph" {\n')
        assert 'v0 [label="A\\n-2 [g=1]", shape=doublecircle];' in dot
        assert 'v1 [label="B1\\n-2", style=filled, fillcolor=lightgrey];' in dot
        assert "  v0 -- v1;" in dot
        assert dot.endswith("}\n")
