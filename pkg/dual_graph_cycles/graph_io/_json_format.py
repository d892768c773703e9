import json
from typing import Dict, List, Tuple

from dual_graph_cycles.lattice import VertexData
from dual_graph_cycles.exceptions import GraphSyntaxError, InputError


def _location(text: str, needle: str) -> Tuple[int, int]:
    # json doesn't keep node positions, so point at the first occurrence of the offending token.
    offset = text.find(needle)
    if offset < 0:
        return 1, 1

    line = text.count('\n', 0, offset) + 1
    return line, offset - (text.rfind('\n', 0, offset) + 1) + 1


class GraphJson:
    """
    The GraphJson class parses the JSON format:

        {"vertices": [{"name": "A", "weight": -2, "genus": 1}, {"name": "B1", "weight": -2}],
         "edges": [{"ends": ["A", "B1"], "mult": 1}]}
    """

    top_keys = ('vertices', 'edges')
    vertex_keys = ('name', 'weight', 'genus', 'conductor')
    edge_keys = ('ends', 'mult')

    __slots__ = 'vertices', 'edges', '_index', '_text'

    def __init__(self, text: str):
        self.vertices = []  # type: List[VertexData]
        self.edges = []  # type: List[Tuple[int, int, int]]
        self._index = {}  # type: Dict[str, int]
        self._text = text

        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise GraphSyntaxError(f"Invalid JSON: {error.msg}.", error.lineno, error.colno) from error

        if not isinstance(document, dict):
            raise GraphSyntaxError("Expected a JSON object with vertices and edges.", 1, 1)

        self._check_keys(document, self.top_keys, "graph")

        vertices = document.get('vertices')
        if not isinstance(vertices, list) or not vertices:
            raise GraphSyntaxError("Empty graph. Expected a non-empty vertices list.", *_location(text, '"vertices"'))

        for vertex in vertices:
            self._add_vertex(vertex)

        edges = document.get('edges', [])
        if not isinstance(edges, list):
            raise GraphSyntaxError("edges must be a list.", *_location(text, '"edges"'))

        for edge in edges:
            self._add_edge(edge)

    def __repr__(self):
        return f"GraphJson({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def _fail(self, message: str, needle: str):
        raise GraphSyntaxError(message, *_location(self._text, needle))

    def _check_keys(self, entry: dict, allowed, what: str):
        for key in entry:
            if key not in allowed:
                self._fail(f"Unknown key {key!r} for {what}. Expected one of {list(allowed)}.", f'"{key}"')

    def _add_vertex(self, entry):
        if not isinstance(entry, dict):
            self._fail("Every vertex must be an object.", '"vertices"')

        self._check_keys(entry, self.vertex_keys, "vertex")
        name = entry.get('name')

        if not isinstance(name, str) or not name:
            self._fail("Every vertex needs a non-empty string name.", '"vertices"')
        if name in self._index:
            self._fail(f"Vertex {name!r} is declared twice.", f'"{name}"')
        if 'weight' not in entry:
            self._fail(f"Vertex {name!r} is missing weight.", f'"{name}"')

        try:
            vertex = VertexData(entry['weight'], entry.get('genus', 0), entry.get('conductor', 0), name)
        except InputError as error:
            self._fail(str(error), f'"{name}"')

        self._index[name] = len(self.vertices)
        self.vertices.append(vertex)

    def _add_edge(self, entry):
        if not isinstance(entry, dict):
            self._fail("Every edge must be an object.", '"edges"')

        self._check_keys(entry, self.edge_keys, "edge")
        ends = entry.get('ends')

        if not isinstance(ends, list) or len(ends) != 2:
            self._fail("Every edge needs ends: [name, name].", '"ends"')

        for name in ends:
            if not isinstance(name, str):
                self._fail(f"Edge ends must be vertex names, not {name!r}.", '"ends"')
            if name not in self._index:
                self._fail(f"Unknown vertex {name!r}.", '"ends"')

        a, b = (self._index[name] for name in ends)
        multiplicity = entry.get('mult', 1)

        if a == b:
            self._fail("Self-loops are not allowed in a dual graph.", '"ends"')
        if not isinstance(multiplicity, int) or isinstance(multiplicity, bool) or multiplicity < 1:
            self._fail(f"mult must be an integer >= 1, not {multiplicity!r}.", '"mult"')

        self.edges.append((a, b, multiplicity))
