import logging
from collections.abc import Iterable
from typing import Tuple

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle, check_negative_definite
from dual_graph_cycles.exceptions import InputError, DomainError
from dual_graph_cycles import formulas

logger = logging.getLogger(__name__)


class ComputationSequence:
    """
    The ComputationSequence class stores a chain E_start = Z_1 < Z_2 < ... < Z_l where every step adds one curve E
    with E . Z_{j-1} > 0. When no such curve is left inside the support, the last cycle is the fundamental cycle of the
    support.
    """

    __slots__ = 'graph', 'start', 'steps', '_cycles'

    def __init__(self, graph: WeightedDualGraph, start: int, steps=None):
        self.graph = graph
        self.start = start
        self.steps = []
        self._cycles = [graph.basis(start)]

        if steps is not None:
            self.extend(steps)

    def __repr__(self):
        return f"ComputationSequence(start={self.start}, steps={self.steps})"

    def __iter__(self):
        yield from self._cycles

    def chain_size(self):
        """Return the number of cycles in the chain, the starting curve included."""
        return len(self._cycles)

    def get(self, index: int) -> Cycle:
        """Return a cycle at a given index"""
        return self._cycles[index]

    def final(self) -> Cycle:
        return self._cycles[-1]

    def append(self, vertex: int):
        """Add E_vertex to the last cycle of the chain"""
        current = self._cycles[-1]
        product = (self.graph.matrix * current)[vertex]

        # Assert positivity
        if product <= 0:
            raise InputError(f"E_{vertex} . Z = {product} <= 0, so E_{vertex} can't extend the computation sequence "
                             f"at {current!r}")

        self._cycles.append(current + self.graph.basis(vertex))
        self.steps.append(vertex)

    def extend(self, vertices: Iterable):
        """Extend the sequence with an iterable of vertex ids"""
        for vertex in vertices:
            self.append(vertex)


def _normalize_support(graph: WeightedDualGraph, support) -> frozenset:
    if support is None:
        return frozenset(range(len(graph)))

    support = frozenset(support)

    if not support:
        raise InputError("The support of a fundamental cycle must be non-empty.")

    if not all(isinstance(vertex, int) and 0 <= vertex < len(graph) for vertex in support):
        raise InputError(f"The support {sorted(support)} refers to vertices outside 0..{len(graph) - 1}")

    if not graph.is_connected_support(support):
        raise InputError(f"The support {sorted(support)} doesn't induce a connected subgraph.")

    return support


def fundamental_cycle(graph: WeightedDualGraph, support=None, check=True) -> Tuple[Cycle, ComputationSequence]:
    """
    Compute the fundamental cycle of a support with Laufer's algorithm: start from the curve with the lowest id and keep
    adding the lowest-id curve E in the support with E . Z > 0.

    :param graph: the dual graph.
    :param support: vertex ids of a connected, negative definite subgraph. Defaults to the whole graph.
    :param check: whether or not to verify negative definiteness of the support first. Without it the loop may not end.
    :return: the fundamental cycle and the computation sequence that witnesses it.
    """
    support = _normalize_support(graph, support)

    if check:
        certificate = check_negative_definite(graph, support)
        if not certificate:
            raise DomainError(f"The subgraph on {sorted(support)} isn't negative definite. "
                              f"Witness {certificate.witness!r}")

    ordered = sorted(support)
    sequence = ComputationSequence(graph, ordered[0])

    while True:
        products = graph.matrix * sequence.final()
        vertex = next((i for i in ordered if products[i] > 0), None)

        if vertex is None:
            break

        sequence.append(vertex)

    logger.debug("fundamental cycle on %s: %s after %d steps", ordered, sequence.final(), len(sequence.steps))
    return sequence.final(), sequence


def degree(graph: WeightedDualGraph) -> int:
    """-Z^2 for the fundamental cycle Z"""
    z, _ = fundamental_cycle(graph)
    return -graph.matrix.bilinear(z, z)


def fundamental_genus(graph: WeightedDualGraph) -> int:
    """p_f = p_a(Z)"""
    z, _ = fundamental_cycle(graph)
    return formulas.pa(graph, z)
