"""
Tyurina components and the Yau sequence Z = D_1 > D_2 > ... > D_m of a graph with positive fundamental genus.
"""

import logging
from typing import List, Tuple

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.cycles import fundamental_cycle, minimal_model
from dual_graph_cycles.exceptions import DomainError, InvariantError
from dual_graph_cycles import formulas

logger = logging.getLogger(__name__)


class YauData:
    """
    The YauData class stores the Yau sequence D_1 > ... > D_m, the Yau cycle Y = sum D_i, its length m, the minimal
    model Z_min of the fundamental cycle and the fundamental genus p_f.
    """

    __slots__ = 'sequence', 'yau_cycle', 'length', 'z_min', 'fundamental_genus'

    def __init__(self, sequence: List[Cycle], z_min: Cycle, fundamental_genus: int):
        self.sequence = list(sequence)
        self.length = len(self.sequence)
        self.z_min = z_min
        self.fundamental_genus = fundamental_genus

        yau_cycle = Cycle.zero(len(z_min))
        for cycle in self.sequence:
            yau_cycle = yau_cycle + cycle
        self.yau_cycle = yau_cycle

    def __repr__(self):
        return f"YauData(m={self.length}, Y={self.yau_cycle!r}, z_min={self.z_min!r})"

    @property
    def fundamental(self) -> Cycle:
        return self.sequence[0]

    @property
    def last(self) -> Cycle:
        """D_m"""
        return self.sequence[-1]

    def last_is_minimal_model(self) -> bool:
        """Whether D_m = Z_min"""
        return self.last == self.z_min


def tyurina_component(graph: WeightedDualGraph, d: Cycle, z_min: Cycle) -> Cycle:
    """
    The maximal subcycle D < d on which d is numerically trivial and p_a(D) = p_a(d). It is the fundamental cycle of
    the connected component of the zero locus {E : E . d = 0} that contains the support of z_min.

    :param graph: the dual graph.
    :param d: the fundamental cycle of its own support.
    :param z_min: the minimal model of d.
    """
    genus = formulas.pa(graph, d)

    if genus <= 0 or genus != formulas.pa(graph, z_min):
        raise DomainError(f"Tyurina components need p_a(d) = p_a(z_min) > 0, got {genus} and "
                          f"{formulas.pa(graph, z_min)}")

    if graph.matrix.bilinear(d, z_min) < 0:
        raise DomainError(f"The sequence terminates: {d} . {z_min} < 0")

    products = graph.matrix * d
    zero_locus = [i for i in d.support() if products[i] == 0]
    anchor = min(z_min.support())
    component = next(component for component in graph.components(zero_locus) if anchor in component)

    if not z_min.support() <= component:
        raise InvariantError(f"The support of {z_min} isn't inside one component of the zero locus of {d}")

    result, _ = fundamental_cycle(graph, component)

    if not (result < d) or formulas.pa(graph, result) != genus:
        raise InvariantError(f"Tyurina component {result} of {d} isn't a smaller cycle of the same genus")

    logger.debug("tyurina component of %s is %s", d, result)
    return result


def yau_sequence(graph: WeightedDualGraph) -> YauData:
    """
    Iterate Tyurina components from the fundamental cycle until D_m . Z_min < 0. Every invariant of the sequence is
    checked on the way: strict decrease, Z_min as the minimal model of every D_i and p_a(Y) = m (p_f - 1) + 1.
    """
    z, _ = fundamental_cycle(graph)
    p_f = formulas.pa(graph, z)

    if p_f <= 0:
        raise DomainError(f"The Yau sequence is only defined for p_f > 0, but p_f = {p_f}")

    z_min = minimal_model(graph, z)
    sequence = [z]

    while graph.matrix.bilinear(sequence[-1], z_min) >= 0:
        following = tyurina_component(graph, sequence[-1], z_min)

        if minimal_model(graph, following) != z_min:
            logger.error("minimal model of %s differs from Z_min = %s", following, z_min)
            raise InvariantError(f"Z_min = {z_min} isn't the minimal model of D_{len(sequence) + 1} = {following}")

        sequence.append(following)

        if len(sequence) > z.total():
            raise InvariantError(f"Yau sequence of {z} is longer than its coefficient sum")

    data = YauData(sequence, z_min, p_f)
    expected = data.length * (p_f - 1) + 1

    if formulas.pa(graph, data.yau_cycle) != expected:
        raise InvariantError(f"p_a(Y) = {formulas.pa(graph, data.yau_cycle)} but m (p_f - 1) + 1 = {expected}")

    logger.debug("yau sequence of length %d: %s", data.length, [str(cycle) for cycle in sequence])
    return data


def best_multiple_of_yau(graph: WeightedDualGraph, yau: YauData = None) -> Tuple[int, int]:
    """
    The smallest i >= 1 maximizing p_a(iY), and that maximum. p_a(iY) is concave in i, so the walk stops at the first
    decrease.
    """
    yau = yau_sequence(graph) if yau is None else yau
    best_i, best_value = 1, formulas.pa(graph, yau.yau_cycle)
    i = 2

    while True:
        value = formulas.pa(graph, yau.yau_cycle * i)
        if value < best_value:
            return best_i, best_value
        if value > best_value:
            best_i, best_value = i, value
        i += 1
