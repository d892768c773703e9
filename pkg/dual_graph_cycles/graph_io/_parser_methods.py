import json

from dual_graph_cycles.lattice import WeightedDualGraph
from dual_graph_cycles.graph_io import GraphText, GraphJson


def parse_string(graph_string: str, check=True) -> WeightedDualGraph:
    """
    Parse a graph from text or JSON. JSON is recognised by a leading '{'.

    :param graph_string: the file contents.
    :param check: whether or not to reject graphs that aren't negative definite.
    :return: the validated WeightedDualGraph.
    """
    parsed = GraphJson(graph_string) if graph_string.lstrip().startswith('{') else GraphText(graph_string)
    return WeightedDualGraph(parsed.vertices, parsed.edges, check=check)


parse_graph = parse_string


def parse_file(file_path: str, check=True) -> WeightedDualGraph:
    """Read a graph file and parse it. (Wrapper for parse_string)"""
    with open(file_path, 'r') as file:
        return parse_string(file.read(), check)


def _vertex_line(name, vertex) -> str:
    line = f"vertex {name} weight={vertex.weight}"
    if vertex.genus:
        line += f" genus={vertex.genus}"
    if vertex.conductor:
        line += f" conductor={vertex.conductor}"

    return line


def to_text(graph: WeightedDualGraph) -> str:
    names = graph.names()
    lines = [_vertex_line(name, vertex) for name, vertex in zip(names, graph.vertices)]

    for a, b, multiplicity in graph.edges:
        lines.append(f"edge {names[a]} {names[b]}" + (f" mult={multiplicity}" if multiplicity != 1 else ""))

    return "\n".join(lines) + "\n"


def to_json(graph: WeightedDualGraph) -> str:
    names = graph.names()
    vertices = []

    for name, vertex in zip(names, graph.vertices):
        entry = {"name": name, "weight": vertex.weight}
        if vertex.genus:
            entry["genus"] = vertex.genus
        if vertex.conductor:
            entry["conductor"] = vertex.conductor
        vertices.append(entry)

    edges = [{"ends": [names[a], names[b]], "mult": multiplicity} for a, b, multiplicity in graph.edges]

    return json.dumps({"vertices": vertices, "edges": edges}, indent=2, sort_keys=True) + "\n"
