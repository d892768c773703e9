"""The canonical cycle Z_K, defined by Z_K . E_i = -K . E_i for every i, and numerical Gorenstein-ness."""

from fractions import Fraction
from typing import Optional

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle, RationalCycle
from dual_graph_cycles.exceptions import InvariantError
from dual_graph_cycles import formulas


class CanonicalData:
    __slots__ = 'z_k', 'is_numerically_gorenstein'

    def __init__(self, z_k: RationalCycle):
        self.z_k = z_k
        self.is_numerically_gorenstein = z_k.is_integral()

    def __repr__(self):
        return f"CanonicalData(z_k={self.z_k!r}, gorenstein={self.is_numerically_gorenstein})"


def canonical_cycle(graph: WeightedDualGraph) -> CanonicalData:
    """Solve M z = -k exactly and verify the solution by substituting it back."""
    k = formulas.k_vector(graph)
    solution = graph.matrix.solve([-value for value in k])

    for i, row in enumerate(graph.matrix):
        if sum(entry * value for entry, value in zip(row, solution)) != -k[i]:
            raise InvariantError(f"Back-substitution of the canonical cycle failed at E_{i}")

    return CanonicalData(RationalCycle(solution))


def ratio_to(z_k: RationalCycle, cycle: Cycle) -> Optional[Fraction]:
    """Return r with z_k = r * cycle, or None if z_k isn't a multiple of cycle."""
    if cycle.is_zero():
        return Fraction(0) if all(value == 0 for value in z_k) else None

    index = min(cycle.support())
    ratio = z_k[index] / cycle[index]

    return ratio if z_k == RationalCycle(cycle) * ratio else None
