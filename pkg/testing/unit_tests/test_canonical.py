from fractions import Fraction

import pytest

from dual_graph_cycles.lattice import Cycle, RationalCycle
from dual_graph_cycles.canonical import canonical_cycle, ratio_to
from testing.unit_tests._graphs import chain, e_graph, b1ab2, degree_one, single


class TestCanonicalCycle:
    @pytest.mark.parametrize("graph, expected", [
        (b1ab2(), (2, 1, 1)),
        (degree_one(), (2, 1)),
        (single(-2, genus=2), (2,)),
        (chain(4), (0, 0, 0, 0)),
        (e_graph(8), (0,) * 8),
    ])
    def test_gorenstein(self, graph, expected):
        data = canonical_cycle(graph)

        assert data.is_numerically_gorenstein
        assert data.z_k == Cycle(expected)

    def test_fractional(self):
        data = canonical_cycle(single(-3))

        assert not data.is_numerically_gorenstein
        assert data.z_k == RationalCycle([Fraction(1, 3)])

    def test_defining_equations(self):
        graph = b1ab2()
        z_k = canonical_cycle(graph).z_k.to_cycle()

        assert graph.matrix * z_k == Cycle((-2, 0, 0))


class TestRatio:
    @pytest.mark.parametrize("z_k, cycle, expected", [
        (RationalCycle([2, 1, 1]), Cycle((2, 1, 1)), Fraction(1)),
        (RationalCycle([2, 2]), Cycle((1, 1)), Fraction(2)),
        (RationalCycle([1, 2]), Cycle((1, 1)), None),
        (RationalCycle([0, 0]), Cycle((0, 0)), Fraction(0)),
        (RationalCycle([1, 0]), Cycle((0, 0)), None),
    ])
    def test_ratio(self, z_k, cycle, expected):
        assert ratio_to(z_k, cycle) == expected
