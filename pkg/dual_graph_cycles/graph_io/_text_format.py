import re
from typing import Dict, List, Tuple

from dual_graph_cycles.lattice import VertexData
from dual_graph_cycles.exceptions import GraphSyntaxError, InputError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_INTEGER = re.compile(r"[+-]?[0-9]+\Z")


class GraphText:
    """
    The GraphText class parses the text format:

        # comment
        vertex A weight=-2 genus=1
        vertex B1 weight=-2 ; edge A B1 mult=2

    Statements are separated by newlines or ';'. Every statement is a keyword, a fixed number of positional names and
    optional key=value options.
    """

    statement_names = {'vertex': 1, 'edge': 2}
    statement_options = {'vertex': ('weight', 'genus', 'conductor'), 'edge': ('mult',)}
    required_options = {'vertex': ('weight',), 'edge': ()}

    __slots__ = 'vertices', 'edges', '_index'

    def __init__(self, text: str):
        self.vertices = []  # type: List[VertexData]
        self.edges = []  # type: List[Tuple[int, int, int]]
        self._index = {}  # type: Dict[str, int]

        for statement in self._statements(text):
            self._parse_statement(statement)

        if not self.vertices:
            raise GraphSyntaxError("Empty graph. Expected at least one vertex statement.", 1, 1)

    def __repr__(self):
        return f"GraphText({len(self.vertices)} vertices, {len(self.edges)} edges)"

    @staticmethod
    def _statements(text: str):
        """Yield every statement as a list of (token, line, column)."""
        for line_number, line in enumerate(text.splitlines(), start=1):
            comment = line.find('#')
            if comment >= 0:
                line = line[:comment]

            statement = []
            for match in re.finditer(r";|[^\s;]+", line):
                if match.group() == ';':
                    if statement:
                        yield statement
                    statement = []
                else:
                    statement.append((match.group(), line_number, match.start() + 1))

            if statement:
                yield statement

    def _parse_statement(self, statement):
        keyword, line, column = statement[0]

        if keyword not in self.statement_names:
            raise GraphSyntaxError(f"Unknown statement {keyword!r}. Expected one of {sorted(self.statement_names)}.",
                                   line, column)

        name_count = self.statement_names[keyword]
        names = statement[1:1 + name_count]

        if len(names) < name_count or any('=' in token for token, _, _ in names):
            raise GraphSyntaxError(f"{keyword} expects {name_count} name(s).", line, column)

        for token, token_line, token_column in names:
            if not _NAME.match(token):
                raise GraphSyntaxError(f"Invalid name {token!r}.", token_line, token_column)

        options = self._parse_options(keyword, statement[1 + name_count:], line, column)

        if keyword == 'vertex':
            self._add_vertex(names[0], options, line, column)
        else:
            self._add_edge(names, options, line, column)

    def _parse_options(self, keyword, tokens, line, column) -> Dict[str, int]:
        options = {}

        for token, token_line, token_column in tokens:
            key, separator, value = token.partition('=')

            if not separator:
                raise GraphSyntaxError(f"Expected key=value, found {token!r}.", token_line, token_column)
            if key not in self.statement_options[keyword]:
                raise GraphSyntaxError(f"Unknown key {key!r} for {keyword}. Expected one of "
                                       f"{list(self.statement_options[keyword])}.", token_line, token_column)
            if key in options:
                raise GraphSyntaxError(f"Duplicate key {key!r}.", token_line, token_column)
            if not _INTEGER.match(value):
                raise GraphSyntaxError(f"{key} must be an integer, not {value!r}.", token_line,
                                       token_column + len(key) + 1)

            options[key] = int(value)

        for key in self.required_options[keyword]:
            if key not in options:
                raise GraphSyntaxError(f"{keyword} is missing {key}=<int>.", line, column)

        return options

    def _add_vertex(self, name_token, options, line, column):
        name, name_line, name_column = name_token

        if name in self._index:
            raise GraphSyntaxError(f"Vertex {name!r} is declared twice.", name_line, name_column)

        try:
            vertex = VertexData(options['weight'], options.get('genus', 0), options.get('conductor', 0), name)
        except InputError as error:
            raise GraphSyntaxError(str(error), line, column) from error

        self._index[name] = len(self.vertices)
        self.vertices.append(vertex)

    def _add_edge(self, name_tokens, options, line, column):
        ends = []
        for name, name_line, name_column in name_tokens:
            if name not in self._index:
                raise GraphSyntaxError(f"Unknown vertex {name!r}. Declare vertices before their edges.",
                                       name_line, name_column)
            ends.append(self._index[name])

        multiplicity = options.get('mult', 1)

        if ends[0] == ends[1]:
            raise GraphSyntaxError("Self-loops are not allowed in a dual graph.", line, column)
        if multiplicity < 1:
            raise GraphSyntaxError(f"mult must be >= 1, not {multiplicity}.", line, column)

        self.edges.append((ends[0], ends[1], multiplicity))
