from typing import Optional, Tuple

import networkx as nx

from dual_graph_cycles.lattice import WeightedDualGraph

E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


def _arm_length(tree: nx.Graph, node, first) -> int:
    length, previous, current = 1, node, first
    while tree.degree(current) == 2:
        previous, current = current, next(v for v in tree.neighbors(current) if v != previous)
        length += 1

    return length


def tree_type(tree: nx.Graph) -> Optional[Tuple[str, int]]:
    """Recognize a simply laced Dynkin tree by its shape. Returns ("A", n), ("D", n), ("E", n) or None."""
    n = tree.number_of_nodes()

    if n == 0 or not nx.is_tree(tree):
        return None

    degrees = sorted((d for _, d in tree.degree()), reverse=True)

    if n == 1 or degrees[0] <= 2:
        return "A", n

    if degrees[0] > 3 or (n > 1 and degrees[1] > 2):
        return None

    node = next(v for v, d in tree.degree() if d == 3)
    arms = tuple(sorted(_arm_length(tree, node, neighbour) for neighbour in tree.neighbors(node)))

    if arms[0] == 1 and arms[1] == 1:
        return "D", n

    if arms in E_ARMS:
        return "E", E_ARMS[arms]

    return None


def recognize_ade(graph: WeightedDualGraph, vertices) -> Optional[Tuple[str, int]]:
    """
    ADE type of the subgraph induced by vertices: every curve must be a rational (-2)-curve, every edge simple, and the
    shape a Dynkin tree.
    """
    vertices = set(vertices)

    if not all(graph.vertices[i].is_minus_two_curve() for i in vertices):
        return None

    subgraph = graph.to_networkx().subgraph(vertices)

    if any(multiplicity != 1 for _, _, multiplicity in subgraph.edges.data("multiplicity")):
        return None

    return tree_type(subgraph)


def _arm(tree: nx.Graph, node, first) -> list:
    arm, previous = [first], node
    while tree.degree(arm[-1]) == 2:
        previous, current = arm[-1], next(v for v in tree.neighbors(arm[-1]) if v != previous)
        arm.append(current)

    return arm


class ChainLayout:
    """
    A star shaped tree drawn the way Dynkin diagrams are: the two longer arms and the trivalent vertex as one chain,
    the shortest arm hanging off it. str() gives the cycle in that order, e.g. "2 4 6 5 4 3 2 | branch 3" for E8.
    """

    __slots__ = 'chain', 'branch', 'cycle'

    def __init__(self, chain, branch, cycle=None):
        self.chain = list(chain)
        self.branch = list(branch)
        self.cycle = cycle

    def __repr__(self):
        return f"ChainLayout(chain={self.chain}, branch={self.branch})"

    def _coefficients(self, vertices) -> list:
        return list(vertices) if self.cycle is None else [self.cycle[i] for i in vertices]

    def __str__(self):
        chain = " ".join(str(c) for c in self._coefficients(self.chain))
        branch = " ".join(str(c) for c in self._coefficients(self.branch))
        return f"{chain} | branch {branch}"

    def to_dict(self) -> dict:
        return {"chain": self._coefficients(self.chain), "branch": self._coefficients(self.branch)}


def star_layout(graph: WeightedDualGraph, cycle=None) -> Optional[ChainLayout]:
    """
    Layout of a tree with simple edges and exactly one trivalent vertex, None for any other graph. Arms are ordered by
    length, then by their first vertex. Given a cycle, the layout shows its coefficients instead of vertex indices.
    """
    tree = graph.to_networkx()

    if not nx.is_tree(tree) or any(multiplicity != 1 for _, _, multiplicity in tree.edges.data("multiplicity")):
        return None

    nodes = [v for v, d in tree.degree() if d >= 3]
    if len(nodes) != 1 or tree.degree(nodes[0]) != 3:
        return None

    node = nodes[0]
    arms = sorted((_arm(tree, node, neighbour) for neighbour in tree.neighbors(node)),
                  key=lambda arm: (len(arm), arm[0]))

    return ChainLayout(arms[1][::-1] + [node] + arms[2], arms[0], cycle)
