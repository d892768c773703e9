import itertools
import logging
import random
from typing import Iterator, List

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.exceptions import InputError, DomainError, ResourceLimitError
from dual_graph_cycles import formulas, LIMITS

logger = logging.getLogger(__name__)


def count_subcycles(d: Cycle) -> int:
    """Number of cycles 0 <= C <= d, both ends included"""
    count = 1
    for value in d:
        count *= value + 1

    return count


def subcycles(d: Cycle, cap=None, proper=True) -> Iterator[Cycle]:
    """
    Iterate over the subcycles of an effective cycle, in lexicographic order of coefficients.

    :param d: the effective cycle.
    :param cap: the maximum number of candidates. Defaults to LIMITS["subcycles"].
    :param proper: skip 0 and d itself.
    """
    cap = LIMITS["subcycles"] if cap is None else cap

    if not d.is_effective():
        raise InputError(f"{d!r} isn't effective.")

    if count_subcycles(d) > cap:
        raise ResourceLimitError(f"{d!r} has {count_subcycles(d)} subcycles, more than the budget of {cap}. "
                                 f"Raise the cap or LIMITS['subcycles'].")

    for values in itertools.product(*(range(value + 1) for value in d)):
        candidate = Cycle(values)
        if proper and (candidate.is_zero() or candidate == d):
            continue
        yield candidate


def is_chain_connected(graph: WeightedDualGraph, d: Cycle, cap=None) -> bool:
    """
    D is chain-connected when, for every proper subcycle 0 < C < D, some component E <= D - C has E . C > 0. Decided by
    trying every subcycle.
    """
    if not d.is_effective():
        raise InputError(f"{d!r} isn't effective.")

    if not graph.is_connected_support(d.support()):
        raise InputError(f"{d!r} has a disconnected support.")

    for c in subcycles(d, cap):
        remainder = d - c
        products = graph.matrix * c
        if not any(remainder[i] >= 1 and products[i] > 0 for i in range(len(d))):
            logger.debug("%s isn't chain-connected: -%s is nef on %s", d, c, remainder)
            return False

    return True


def removable_curves(graph: WeightedDualGraph, d: Cycle) -> List[int]:
    """Components E of d with p_a(E) = 0 and E . (d - E) = 1, the (-1)_d-curves"""
    products = graph.matrix * d
    return [i for i in sorted(d.support())
            if formulas.vertex_genus(graph, i) == 0 and products[i] - graph.vertices[i].weight == 1]


def minimal_model(graph: WeightedDualGraph, d: Cycle, rng: random.Random = None) -> Cycle:
    """
    The unique minimal subcycle of a chain-connected d with the same arithmetic genus. Computed by subtracting
    (-1)_d-curves until none is left. Removal keeps both p_a and chain-connectedness.

    :param graph: the dual graph.
    :param d: a chain-connected cycle with p_a(d) > 0.
    :param rng: if given, removals happen in a random order instead of lowest id first.
    """
    genus = formulas.pa(graph, d)

    if genus <= 0:
        raise DomainError(f"The minimal model is only defined when p_a > 0, but p_a({d!r}) = {genus}")

    while True:
        candidates = removable_curves(graph, d)
        if not candidates:
            return d

        vertex = rng.choice(candidates) if rng is not None else candidates[0]
        logger.debug("removing (-1)-curve E_%d from %s", vertex, d)
        d = d - graph.basis(vertex)
