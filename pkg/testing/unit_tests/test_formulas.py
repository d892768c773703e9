from fractions import Fraction

import pytest
from hypothesis import given, assume, strategies as st

from dual_graph_cycles import formulas
from dual_graph_cycles.lattice import Cycle
from dual_graph_cycles.exceptions import InputError
from testing.unit_tests._graphs import b1ab2, single, e_graph


class TestRiemannRoch:
    def test_k_vector(self):
        assert formulas.k_vector(b1ab2()) == Cycle((2, 0, 0))
        assert formulas.k_vector(single(-3)) == Cycle((1,))
        assert formulas.k_vector(single(-1, genus=2)) == Cycle((3,))

    def test_fundamental_cycle_genus(self):
        graph = b1ab2()
        z = Cycle((1, 1, 1))

        assert formulas.canonical_degree(graph, z) == 2
        assert formulas.chi(graph, z) == 0
        assert formulas.pa(graph, z) == 1

    def test_rational_double_point(self):
        z = Cycle((2, 4, 6, 5, 4, 3, 2, 3))

        assert formulas.chi(e_graph(8), z) == 1
        assert formulas.pa(e_graph(8), z) == 0

    def test_vertex_genus(self):
        assert formulas.vertex_genus(b1ab2(), 0) == 1
        assert formulas.vertex_genus(b1ab2(), 1) == 0

    @pytest.mark.parametrize("d", [Cycle((0, 0, 0)), Cycle((1, -1, 0))])
    def test_genus_of_non_effective_cycle(self, d):
        with pytest.raises(InputError):
            formulas.pa(b1ab2(), d)

    @given(st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3),
           st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3))
    def test_additivity(self, a, b):
        assume(any(a) and any(b))

        assert formulas.additivity_defect(b1ab2(), Cycle(a), Cycle(b)) == 0


class TestClosedForms:
    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_multiple_genus_gain_matches_direct_genus(self, i):
        graph = b1ab2()
        yau_cycle = Cycle((2, 1, 1))

        assert formulas.multiple_genus_gain(1, 2, -2, i) == formulas.pa(graph, yau_cycle * i) - 1

    @pytest.mark.parametrize("p, length, expected", [(1, 1, 1), (2, 1, 2), (3, 2, 7), (2, 3, 4)])
    def test_degree_one_genus(self, p, length, expected):
        assert formulas.degree_one_genus(p, length) == expected

    @pytest.mark.parametrize("p, length, expected", [(1, 2, 1), (2, 2, 3), (3, 2, 5), (4, 1, 5)])
    def test_degree_two_genus(self, p, length, expected):
        assert formulas.degree_two_genus(p, length) == expected

    @pytest.mark.parametrize("p, length, expected", [(1, 2, 2), (2, 1, 2), (3, 2, 8)])
    def test_geometric_genus_bound(self, p, length, expected):
        assert formulas.geometric_genus_bound(p, length) == expected

    @pytest.mark.parametrize("p, degree, genus, factor", [(1, 2, 1, 1), (3, 2, 3, 2), (4, 3, 4, 2), (2, 3, 2, 1)])
    def test_multiple_of_z(self, p, degree, genus, factor):
        assert formulas.multiple_of_z_genus(p, degree) == genus
        assert isinstance(formulas.multiple_of_z_genus(p, degree), Fraction)
        assert formulas.multiple_of_z_factor(p, degree) == factor
