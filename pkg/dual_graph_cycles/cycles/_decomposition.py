import logging
from typing import List, Tuple

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle, is_anti_nef_on
from dual_graph_cycles.cycles._chain_connected import count_subcycles, subcycles, is_chain_connected
from dual_graph_cycles.exceptions import InputError, ResourceLimitError
from dual_graph_cycles import LIMITS

logger = logging.getLogger(__name__)


class ChainDecomposition:
    """
    The ChainDecomposition class stores D = m_1 D_1 + ... + m_r D_r where the D_i are chain-connected, -D_i is nef on
    D_j for i < j, -D_i is nef on D_i whenever m_i >= 2, and for i < j either D_i > D_j or the supports are disjoint.
    """

    __slots__ = '_parts'

    def __init__(self, parts=None):
        self._parts = []

        if parts is not None:
            for part, multiplicity in parts:
                self.append(part, multiplicity)

    def __repr__(self):
        return f"ChainDecomposition({[(str(part), multiplicity) for part, multiplicity in self._parts]})"

    def __iter__(self):
        yield from self._parts

    def chain_size(self):
        return len(self._parts)

    def get(self, index: int) -> Tuple[Cycle, int]:
        return self._parts[index]

    def append(self, part: Cycle, multiplicity: int):
        if multiplicity < 1:
            raise InputError(f"Multiplicities must be >= 1, not {multiplicity}")
        if not part.is_effective():
            raise InputError(f"{part!r} isn't effective.")

        self._parts.append((part, multiplicity))

    def total(self) -> Cycle:
        size = len(self._parts[0][0])
        total = Cycle.zero(size)
        for part, multiplicity in self._parts:
            total = total + part * multiplicity

        return total

    def violations(self, graph: WeightedDualGraph, d: Cycle, cap=None) -> List[str]:
        """Return a description of every decomposition condition that fails. An empty list means valid."""
        problems = []

        if not self._parts:
            return ["the decomposition is empty"]

        if self.total() != d:
            problems.append(f"parts add up to {self.total()}, not {d}")

        for i, (part, multiplicity) in enumerate(self._parts):
            if not is_chain_connected(graph, part, cap):
                problems.append(f"part {i} ({part}) isn't chain-connected")

            if multiplicity >= 2 and not is_anti_nef_on(graph, part, part):
                problems.append(f"part {i} has multiplicity {multiplicity} but -D_{i} isn't nef on D_{i}")

            for j in range(i + 1, len(self._parts)):
                later = self._parts[j][0]

                if not is_anti_nef_on(graph, part, later):
                    problems.append(f"-D_{i} isn't nef on D_{j}")

                if not (part > later or not (part.support() & later.support())):
                    problems.append(f"D_{i} and D_{j} are neither nested nor disjoint")

        return problems


def _grow(graph: WeightedDualGraph, d: Cycle, start: int) -> Cycle:
    # Computation-sequence growth inside d; stops at a maximal chain-connected subcycle.
    c = graph.basis(start)
    while True:
        products = graph.matrix * c
        remainder = d - c
        vertex = next((i for i in range(len(d)) if remainder[i] >= 1 and products[i] > 0), None)

        if vertex is None:
            return c

        c = c + graph.basis(vertex)


def _peel(graph: WeightedDualGraph, d: Cycle, preference: List[int]) -> ChainDecomposition:
    decomposition = ChainDecomposition()
    remaining = d

    while not remaining.is_zero():
        support = remaining.support()
        start = next(vertex for vertex in preference if vertex in support)
        part = _grow(graph, remaining, start)
        multiplicity = min(remaining[i] // part[i] for i in part.support())

        decomposition.append(part, multiplicity)
        remaining = remaining - part * multiplicity

    return decomposition


class _Budget:
    __slots__ = 'cap', 'spent'

    def __init__(self, cap: int):
        self.cap = cap
        self.spent = 0

    def charge(self, amount: int):
        self.spent += amount
        if self.spent > self.cap:
            raise ResourceLimitError(f"The decomposition search went past its budget of {self.cap} subcycles. "
                                     f"Raise the cap or LIMITS['subcycles'].")


def _chain_connected_parts(graph: WeightedDualGraph, d: Cycle, budget: _Budget) -> List[Cycle]:
    # Every chain-connected 0 < C <= d, largest first
    parts = []
    budget.charge(count_subcycles(d))

    for c in subcycles(d, budget.cap, proper=False):
        if c.is_zero() or not graph.is_connected_support(c.support()):
            continue

        budget.charge(count_subcycles(c))
        if is_chain_connected(graph, c, budget.cap):
            parts.append(c)

    return sorted(parts, key=lambda c: (-c.total(), tuple(-value for value in c)))


def _fits_after(graph: WeightedDualGraph, chosen, part: Cycle) -> bool:
    return all(is_anti_nef_on(graph, earlier, part) and
               (earlier > part or not (earlier.support() & part.support())) for earlier, _ in chosen)


def _search(graph: WeightedDualGraph, remaining: Cycle, parts: List[Cycle], chosen: list, budget: _Budget):
    if remaining.is_zero():
        return ChainDecomposition(chosen)

    for part in parts:
        if not part <= remaining or not _fits_after(graph, chosen, part):
            continue

        top = min(remaining[i] // part[i] for i in part.support())
        if top >= 2 and not is_anti_nef_on(graph, part, part):
            top = 1

        for multiplicity in range(top, 0, -1):
            budget.charge(1)
            chosen.append((part, multiplicity))
            found = _search(graph, remaining - part * multiplicity, parts, chosen, budget)

            if found is not None:
                return found
            chosen.pop()

    return None


def exhaustive_decomposition(graph: WeightedDualGraph, d: Cycle, cap=None) -> ChainDecomposition:
    """
    Search every ordered choice of chain-connected parts, largest first, for a decomposition satisfying every
    condition of ChainDecomposition. The work, counted in subcycles, is bounded by cap (LIMITS["subcycles"] by default).
    """
    if not d.is_effective():
        raise InputError(f"{d!r} isn't effective.")

    budget = _Budget(LIMITS["subcycles"] if cap is None else cap)
    parts = _chain_connected_parts(graph, d, budget)
    decomposition = _search(graph, d, parts, [], budget)

    if decomposition is None or decomposition.violations(graph, d, cap):
        raise ResourceLimitError(f"No chain-connected decomposition of {d!r} exists among its "
                                 f"{len(parts)} chain-connected subcycles.")

    logger.debug("exhaustive decomposition of %s after %d subcycles: %s", d, budget.spent, decomposition)
    return decomposition


def decompose(graph: WeightedDualGraph, d: Cycle, cap=None) -> ChainDecomposition:
    """
    Split an effective cycle into chain-connected components. Maximal chain-connected subcycles are peeled off greedily,
    starting from the lowest vertex id; if the result fails verification, every other starting preference is tried,
    then a bounded exhaustive search.

    :return: a verified ChainDecomposition.
    """
    if not d.is_effective():
        raise InputError(f"{d!r} isn't effective.")

    ordered = sorted(d.support())

    for attempt in range(len(ordered)):
        preference = ordered[attempt:] + ordered[:attempt]
        decomposition = _peel(graph, d, preference)
        problems = decomposition.violations(graph, d, cap)

        if not problems:
            return decomposition

        logger.debug("decomposition attempt %d of %s failed: %s", attempt, d, problems)

    logger.info("greedy decomposition of %s failed from every start, searching exhaustively", d)
    return exhaustive_decomposition(graph, d, cap)
