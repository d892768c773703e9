from dual_graph_cycles.lattice import WeightedDualGraph, Cycle


def _label(name, vertex, coefficient=None) -> str:
    label = f"{name}\\n{vertex.weight}"
    if vertex.genus:
        label += f" [g={vertex.genus}]"
    if vertex.conductor:
        label += f" [delta={vertex.conductor}]"
    if coefficient is not None:
        label += f"\\n{coefficient}"

    return label


def to_dot(graph: WeightedDualGraph, cycle: Cycle = None, highlight=None, name="dual_graph") -> str:
    """
    A handy debugging function which converts a dual graph to DOT for graphviz.

    :param graph: the graph to draw.
    :param cycle: a cycle whose coefficients are printed under each vertex.
    :param highlight: vertex ids drawn filled, e.g. the support of Gamma'.
    :param name: the DOT graph name.
    """
    highlight = set() if highlight is None else set(highlight)
    names = graph.names()
    lines = [f"graph \"{name}\" {{", "  node [shape=circle];"]

    for i, vertex in enumerate(graph.vertices):
        attributes = f'label="{_label(names[i], vertex, None if cycle is None else cycle[i])}"'
        if not vertex.is_minus_two_curve():
            attributes += ", shape=doublecircle"
        if i in highlight:
            attributes += ", style=filled, fillcolor=lightgrey"
        lines.append(f"  v{i} [{attributes}];")

    for a, b, multiplicity in graph.edges:
        lines.append(f"  v{a} -- v{b}" + (f' [label="{multiplicity}"]' if multiplicity != 1 else "") + ";")

    lines.append("}")
    return "\n".join(lines) + "\n"
