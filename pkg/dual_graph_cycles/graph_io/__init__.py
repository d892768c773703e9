"""
The graph_io sub-module reads and writes weighted dual graphs: a line-oriented text format for hand-written fixtures,
a JSON format for tools, and DOT for drawing.

specific maintenance notes:
    - Both formats must round-trip: parse_string(to_text(g)) and parse_string(to_json(g)) rebuild g exactly.
    - Parse errors are GraphSyntaxError with 1-based line and column. Keep them pointing at the offending token.
"""

from dual_graph_cycles.graph_io._text_format import GraphText
from dual_graph_cycles.graph_io._json_format import GraphJson
from dual_graph_cycles.graph_io._parser_methods import parse_string, parse_file, parse_graph, to_text, to_json
