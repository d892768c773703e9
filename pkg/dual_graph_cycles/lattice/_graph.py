from typing import Iterable, List, Tuple

import networkx as nx

from dual_graph_cycles.lattice import VertexData, Cycle
from dual_graph_cycles.lattice._matrix import IntersectionMatrix, DefinitenessCertificate
from dual_graph_cycles.exceptions import InputError, DomainError


class WeightedDualGraph:
    """
    The WeightedDualGraph class is the dual graph of an exceptional set: one vertex per curve E_i, and edges weighted by
    the intersection multiplicity E_i . E_j. Vertex ids are dense positions 0..n-1 in the order the vertices were given.

    Graphs are validated on construction (no self-loops, positive multiplicities, connected, weights <= -1). Negative
    definiteness is checked too unless check=False, in which case check_negative_definite() must be called explicitly.
    """

    __slots__ = 'vertices', 'edges', 'matrix', '_nx_graph', '_name_index'

    def __init__(self, vertices: Iterable[VertexData], edges: Iterable[Tuple[int, int, int]] = (), check=True):
        """
        :param vertices: the exceptional curves, in order.
        :param edges: (vertex-id, vertex-id, multiplicity) triples. Repeated pairs add up.
        :param check: whether or not to reject graphs whose intersection form isn't negative definite.
        """
        self.vertices = tuple(vertices)
        n = len(self.vertices)

        if n == 0:
            raise InputError("Not a dual graph. A graph needs at least one vertex.")

        if not all(isinstance(vertex, VertexData) for vertex in self.vertices):
            raise InputError("Not a dual graph. Vertices must be VertexData instances.")

        normalized = []
        for edge in edges:
            if len(edge) == 2:
                edge = (edge[0], edge[1], 1)

            a, b, multiplicity = edge
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"Edge {edge} refers to a vertex outside 0..{n - 1}")
            if a == b:
                raise InputError(f"Self-loop on vertex {a}. Dual graphs have no self-loops.")
            if not isinstance(multiplicity, int) or multiplicity < 1:
                raise InputError(f"Edge {edge} has multiplicity {multiplicity!r}. Multiplicities must be >= 1.")

            normalized.append((min(a, b), max(a, b), multiplicity))

        self.edges = tuple(normalized)

        matrix_list = [[0] * n for _ in range(n)]
        for i, vertex in enumerate(self.vertices):
            matrix_list[i][i] = vertex.weight
        for a, b, multiplicity in self.edges:
            matrix_list[a][b] += multiplicity
            matrix_list[b][a] += multiplicity
        self.matrix = IntersectionMatrix(matrix_list)

        self._nx_graph = nx.Graph()
        self._nx_graph.add_nodes_from(range(n))
        for a, b, _ in self.edges:
            self._nx_graph.add_edge(a, b, multiplicity=matrix_list[a][b])

        if not nx.is_connected(self._nx_graph):
            raise InputError("Not a dual graph. The graph is disconnected.")

        self._name_index = {vertex.name: i for i, vertex in enumerate(self.vertices) if vertex.name is not None}

        if check:
            certificate = self.matrix.definiteness_certificate()
            if not certificate:
                raise DomainError(f"The intersection form isn't negative definite. "
                                  f"Witness {certificate.witness!r} has non-negative self-intersection.")

    def __repr__(self):
        return f"WeightedDualGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __len__(self):
        return len(self.vertices)

    def names(self) -> List[str]:
        """Vertex names, falling back to E<index> for unnamed vertices."""
        return [vertex.name if vertex.name is not None else f"E{i}" for i, vertex in enumerate(self.vertices)]

    def index(self, name: str) -> int:
        if name not in self._name_index:
            raise InputError(f"Unknown vertex {name!r}")

        return self._name_index[name]

    def multiplicity(self, a: int, b: int) -> int:
        return self.matrix[a][b] if a != b else 0

    def neighbours(self, vertex: int) -> List[int]:
        return sorted(self._nx_graph.neighbors(vertex))

    def to_networkx(self) -> nx.Graph:
        """A copy of the underlying networkx graph, with vertex data attached to each node."""
        graph = self._nx_graph.copy()
        for i, vertex in enumerate(self.vertices):
            graph.nodes[i].update(weight=vertex.weight, genus=vertex.genus, conductor=vertex.conductor)

        return graph

    def is_connected_support(self, vertices) -> bool:
        vertices = set(vertices)
        return len(vertices) > 0 and nx.is_connected(self._nx_graph.subgraph(vertices))

    def components(self, vertices) -> List[frozenset]:
        """Connected components of the induced subgraph, ordered by their lowest vertex id."""
        components = nx.connected_components(self._nx_graph.subgraph(set(vertices)))
        return sorted((frozenset(component) for component in components), key=min)

    def zero(self) -> Cycle:
        return Cycle.zero(len(self))

    def basis(self, index: int) -> Cycle:
        return Cycle.basis(len(self), index)


def check_negative_definite(graph: WeightedDualGraph, support=None) -> DefinitenessCertificate:
    """
    Decide negative definiteness of the intersection form, on the whole graph or on the subgraph induced by support.
    Witness ids of a failing support refer to the full graph.
    """
    if support is None:
        return graph.matrix.definiteness_certificate()

    support = sorted(set(support))
    if not graph.is_connected_support(support):
        raise InputError(f"The support {support} doesn't induce a connected subgraph.")

    certificate = graph.matrix.principal(support).definiteness_certificate()
    if certificate.witness is not None:
        values = [0] * len(graph)
        for position, vertex in enumerate(support):
            values[vertex] = certificate.witness[position]
        certificate.witness = Cycle(values)

    return certificate


def intersect(graph: WeightedDualGraph, a: Cycle, b: Cycle) -> int:
    """The intersection number a . b = a^T M b."""
    return graph.matrix.bilinear(a, b)


def _check_effective(d: Cycle):
    if not d.is_effective():
        raise InputError(f"{d!r} isn't effective.")


def is_anti_nef_on(graph: WeightedDualGraph, c: Cycle, d: Cycle) -> bool:
    """
    Whether c . E_i <= 0 for every component E_i of d, i.e. whether the sheaf O_d(-c) is nef.
    """
    _check_effective(d)
    products = graph.matrix * c
    return all(products[i] <= 0 for i in d.support())


def is_numerically_trivial_on(graph: WeightedDualGraph, c: Cycle, d: Cycle) -> bool:
    """Whether c . E_i = 0 for every component E_i of d."""
    _check_effective(d)
    products = graph.matrix * c
    return all(products[i] == 0 for i in d.support())


def is_minimal_resolution(graph: WeightedDualGraph) -> bool:
    return not any(vertex.is_minus_one_curve() for vertex in graph.vertices)
