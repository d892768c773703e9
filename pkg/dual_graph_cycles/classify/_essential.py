from typing import Optional

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.exceptions import DomainError
from dual_graph_cycles import formulas


class EssentialIrreducibility:
    """
    Z is essentially irreducible when exactly one component A of Z isn't a rational (-2)-curve. k is the coefficient of
    A in Z.
    """

    __slots__ = 'holds', 'special_vertex', 'k'

    def __init__(self, holds: bool, special_vertex: Optional[int] = None, k: Optional[int] = None):
        self.holds = holds
        self.special_vertex = special_vertex
        self.k = k

    def __repr__(self):
        return f"EssentialIrreducibility(holds={self.holds}, special_vertex={self.special_vertex}, k={self.k})"

    def __bool__(self):
        return self.holds


def essential_irreducibility(graph: WeightedDualGraph, z: Cycle = None) -> EssentialIrreducibility:
    if z is None:
        z, _ = fundamental_cycle(graph)

    if formulas.pa(graph, z) <= 0:
        raise DomainError("Essential irreducibility is only defined for p_f > 0.")

    candidates = [i for i in sorted(z.support()) if not graph.vertices[i].is_minus_two_curve()]

    if len(candidates) != 1:
        return EssentialIrreducibility(False)

    return EssentialIrreducibility(True, candidates[0], z[candidates[0]])
