import logging
import math
from fractions import Fraction
from typing import List

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.canonical import canonical_cycle
from dual_graph_cycles.exceptions import InputError, ResourceLimitError
from dual_graph_cycles import formulas, LIMITS

logger = logging.getLogger(__name__)


class PaMaxResult:
    """
    The PaMaxResult class holds the largest arithmetic genus over all positive cycles, a cycle reaching it, the box
    bound the search ended with, and whether the box provably contained every better candidate.
    """

    __slots__ = 'maximizer', 'value', 'box_bound', 'boundary_clear'

    def __init__(self, maximizer: Cycle, value: int, box_bound: int, boundary_clear: bool):
        self.maximizer = maximizer
        self.value = value
        self.box_bound = box_bound
        self.boundary_clear = boundary_clear

    def __repr__(self):
        return f"PaMaxResult(value={self.value}, maximizer={self.maximizer!r}, box_bound={self.box_bound}, " \
               f"boundary_clear={self.boundary_clear})"


def _symmetric_decomposition(q: List[List[Fraction]]):
    # q = sum_i pivots[i] * u_i u_i^T with u_i the i-th row of the unit upper triangular `upper`.
    n = len(q)
    work = [list(row) for row in q]
    pivots, upper = [], []

    for i in range(n):
        pivot = work[i][i]
        pivots.append(pivot)
        upper.append([Fraction(0)] * i + [work[i][j] / pivot for j in range(i, n)])

        for r in range(i + 1, n):
            factor = work[r][i] / pivot
            for j in range(i, n):
                work[r][j] -= factor * work[i][j]

    return pivots, upper


def _window(mid: Fraction, radius_sq: Fraction, bound: int) -> range:
    """Integers x in [0, bound] with (x - mid)^2 <= radius_sq"""
    reach = math.isqrt(math.floor(radius_sq)) + 1
    low, high = math.floor(mid - reach), math.ceil(mid + reach)

    while low <= high and (low - mid) ** 2 > radius_sq:
        low += 1
    while high >= low and (high - mid) ** 2 > radius_sq:
        high -= 1

    return range(max(low, 0), min(high, bound) + 1)


def _objective(graph: WeightedDualGraph, k: Cycle, x: Cycle) -> int:
    """D^2 + D.K, which is 2 p_a(D) - 2"""
    return graph.matrix.bilinear(x, x) + sum(a * b for a, b in zip(x, k))


def _search(graph, k, center, pivots, upper, bound, best_value, best_cycle):
    # Enumerate integer points of the ellipsoid {D^2 + D.K >= best_value} inside [0, bound]^n, last coordinate first.
    n = len(graph)
    peak = sum(a * b for a, b in zip(k, center)) / 2
    x = [0] * n
    best = [best_value, best_cycle]

    def visit(i, used):
        if i < 0:
            if not any(x):
                return
            cycle = Cycle(x)
            value = _objective(graph, k, cycle)
            if value > best[0] or (value == best[0] and tuple(x) < tuple(best[1])):
                best[0], best[1] = value, cycle
            return

        remaining = peak - best[0] - used
        if remaining < 0:
            return

        shift = sum(upper[i][j] * (x[j] - center[j]) for j in range(i + 1, n))
        mid = center[i] - shift

        for value in _window(mid, remaining / pivots[i], bound):
            x[i] = value
            visit(i - 1, used + pivots[i] * (value - mid) ** 2)
        x[i] = 0

    visit(n - 1, Fraction(0))
    return best[0], best[1], peak


def pa_max(graph: WeightedDualGraph, initial_bound: int = None, cap: int = None) -> PaMaxResult:
    """
    Maximize p_a(D) = 1 + (D^2 + D.K) / 2 over effective cycles. The objective is a concave quadratic whose real
    maximizer is Z_K / 2, so every cycle beating the current best lies in an ellipsoid around it. The ellipsoid is
    enumerated inside the box [0, B]^n, and B doubles until the whole ellipsoid fits strictly inside the box.

    :param graph: a negative definite dual graph.
    :param initial_bound: the first box bound. Defaults to 4 max(1, p_f) times the largest coefficient of Z.
    :param cap: the largest box bound allowed. Defaults to LIMITS["box"].
    """
    cap = LIMITS["box"] if cap is None else cap

    z, _ = fundamental_cycle(graph)
    p_f = formulas.pa(graph, z)
    bound = 4 * max(1, p_f) * max(z) if initial_bound is None else initial_bound

    if bound < 1:
        raise InputError(f"The box bound must be positive, not {bound}")

    k = formulas.k_vector(graph)
    center = [value / 2 for value in canonical_cycle(graph).z_k]
    pivots, upper = _symmetric_decomposition([[-Fraction(value) for value in row] for row in graph.matrix])
    inverse_diagonal = [-graph.matrix.solve(list(graph.basis(i)))[i] for i in range(len(graph))]

    while True:
        if bound > cap:
            raise ResourceLimitError(f"p_a maximization needs a box bound above the cap of {cap}. "
                                     f"Raise cap or LIMITS['box'].")

        value, maximizer, peak = _search(graph, k, center, pivots, upper, bound, _objective(graph, k, z), z)
        radius_sq = peak - value
        clear = all(bound - c > 0 and (bound - c) ** 2 > radius_sq * inverse
                    for c, inverse in zip(center, inverse_diagonal))

        logger.debug("p_a search with bound %d: best %s at %s, clear=%s", bound, 1 + value // 2, maximizer, clear)

        if clear:
            return PaMaxResult(maximizer, 1 + value // 2, bound, True)

        bound *= 2
