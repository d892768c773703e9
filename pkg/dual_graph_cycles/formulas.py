"""This script contains the Riemann-Roch arithmetic on a weighted dual graph."""

from fractions import Fraction

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.exceptions import InputError, InvariantError


def k_vector(graph: WeightedDualGraph) -> Cycle:
    """Adjunction: K . E_i = -E_i^2 + 2 g_i + 2 delta_i - 2"""
    return Cycle(-vertex.weight + 2 * vertex.genus + 2 * vertex.conductor - 2 for vertex in graph.vertices)


def canonical_degree(graph: WeightedDualGraph, d: Cycle) -> int:
    """D . K"""
    return sum(a * b for a, b in zip(d, k_vector(graph)))


def chi(graph: WeightedDualGraph, d: Cycle) -> int:
    """chi(D) = -(D^2 + D.K) / 2"""
    total = graph.matrix.bilinear(d, d) + canonical_degree(graph, d)

    if total % 2:
        raise InvariantError(f"D^2 + D.K = {total} is odd for {d!r}. Check the genus and conductor data.")

    return -total // 2


def pa(graph: WeightedDualGraph, d: Cycle) -> int:
    """Arithmetic genus p_a(D) = 1 - chi(D) of an effective cycle"""
    if not d.is_effective():
        raise InputError(f"p_a is only defined for effective cycles, not {d!r}")

    return 1 - chi(graph, d)


def vertex_genus(graph: WeightedDualGraph, index: int) -> int:
    """p_a(E_i) = g_i + delta_i"""
    vertex = graph.vertices[index]
    return vertex.genus + vertex.conductor


def additivity_defect(graph: WeightedDualGraph, a: Cycle, b: Cycle) -> int:
    """p_a(A+B) - (p_a(A) + p_a(B) + A.B - 1). Always zero."""
    return pa(graph, a + b) - (pa(graph, a) + pa(graph, b) + graph.matrix.bilinear(a, b) - 1)


def multiple_genus_gain(p_f: int, length: int, z_squared: int, i: int) -> int:
    """p_a(iY) - 1 = m (i (p_f - 1) + i (i - 1) / 2 Z^2) for the Yau cycle Y of length m"""
    return length * (i * (p_f - 1) + i * (i - 1) * z_squared // 2)


def degree_one_genus(p: int, length: int) -> int:
    """p (p - 1) m / 2 + 1"""
    return p * (p - 1) * length // 2 + 1


def degree_two_genus(p: int, length: int) -> int:
    """[p^2 / 4] m + 1"""
    return (p * p // 4) * length + 1


def geometric_genus_bound(p: int, length: int) -> int:
    """[(p + 1)^2 / 4] m"""
    return ((p + 1) ** 2 // 4) * length


def multiple_of_z_genus(p: int, degree: int) -> Fraction:
    """(d/2) ((2p - 2)/d - [(p - 1)/d]) ([(p - 1)/d] + 1) + 1, the genus of ([(p - 1)/d] + 1) Z when Z = Z_min"""
    q = (p - 1) // degree
    return Fraction(degree, 2) * (Fraction(2 * p - 2, degree) - q) * (q + 1) + 1


def multiple_of_z_factor(p: int, degree: int) -> int:
    return (p - 1) // degree + 1
