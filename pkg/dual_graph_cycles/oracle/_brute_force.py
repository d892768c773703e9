"""
Exhaustive searches used as independent oracles for the fast algorithms. None of them is clever; they enumerate boxes
of cycles and are bounded by LIMITS["subcycles"].
"""

import itertools
from typing import Optional

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.cycles import subcycles
from dual_graph_cycles.exceptions import ResourceLimitError, InvariantError
from dual_graph_cycles import formulas, LIMITS


def _box(graph: WeightedDualGraph, low: int, high: int, cap=None):
    cap = LIMITS["subcycles"] if cap is None else cap
    count = (high - low + 1) ** len(graph)

    if count > cap:
        raise ResourceLimitError(f"The box [{low}, {high}]^{len(graph)} has {count} cycles, more than the budget of "
                                 f"{cap}.")

    for values in itertools.product(range(low, high + 1), repeat=len(graph)):
        yield Cycle(values)


def anti_nef_minimum(graph: WeightedDualGraph, bound=6, cap=None) -> Optional[Cycle]:
    """Componentwise minimum of every full-support cycle with coefficients in [1, bound] that is anti-nef everywhere"""
    minimum = None

    for cycle in _box(graph, 1, bound, cap):
        if all(value <= 0 for value in graph.matrix * cycle):
            minimum = cycle if minimum is None else Cycle.minimum(minimum, cycle)

    return minimum


def _unique_extreme(candidates, smallest: bool) -> Optional[Cycle]:
    if not candidates:
        return None

    chosen = (min if smallest else max)(candidates, key=lambda cycle: cycle.total())
    for cycle in candidates:
        if not (chosen <= cycle if smallest else cycle <= chosen):
            raise InvariantError(f"{chosen} and {cycle} are incomparable, so the extreme cycle isn't unique")

    return chosen


def minimal_model_by_search(graph: WeightedDualGraph, d: Cycle, cap=None) -> Optional[Cycle]:
    """The unique minimal 0 < C <= d with p_a(C) = p_a(d), found by trying every subcycle"""
    genus = formulas.pa(graph, d)
    candidates = [c for c in subcycles(d, cap, proper=False) if not c.is_zero() and formulas.pa(graph, c) == genus]

    return _unique_extreme(candidates, smallest=True)


def tyurina_by_search(graph: WeightedDualGraph, d: Cycle, cap=None) -> Optional[Cycle]:
    """The unique maximal 0 < C < d with d numerically trivial on C and p_a(C) = p_a(d)"""
    genus = formulas.pa(graph, d)
    products = graph.matrix * d
    candidates = [c for c in subcycles(d, cap)
                  if all(products[i] == 0 for i in c.support()) and formulas.pa(graph, c) == genus]

    return _unique_extreme(candidates, smallest=False)


def pa_max_exhaustive(graph: WeightedDualGraph, bound=6, cap=None) -> tuple:
    """The largest p_a over every non-zero cycle with coefficients in [0, bound], and the first cycle reaching it"""
    best = None

    for cycle in _box(graph, 0, bound, cap):
        if cycle.is_zero():
            continue

        genus = formulas.pa(graph, cycle)
        if best is None or genus > best[0]:
            best = (genus, cycle)

    return best
