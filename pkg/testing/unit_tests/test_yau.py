import pytest

from dual_graph_cycles import formulas
from dual_graph_cycles.lattice import Cycle
from dual_graph_cycles.yau import YauData, yau_sequence, tyurina_component, best_multiple_of_yau
from dual_graph_cycles.exceptions import DomainError
from testing.unit_tests._graphs import chain, b1ab2, degree_one, single, special_chain


class TestYauSequence:
    def test_two_step_sequence(self):
        yau = yau_sequence(b1ab2())

        assert yau.sequence == [Cycle((1, 1, 1)), Cycle((1, 0, 0))]
        assert yau.length == 2
        assert yau.z_min == Cycle((1, 0, 0))
        assert yau.yau_cycle == Cycle((2, 1, 1))
        assert yau.fundamental == Cycle((1, 1, 1))
        assert yau.last_is_minimal_model()

    def test_degree_one_sequence(self):
        yau = yau_sequence(degree_one())

        assert yau.sequence == [Cycle((1, 1)), Cycle((1, 0))]
        assert yau.yau_cycle == Cycle((2, 1))

    @pytest.mark.parametrize("graph, expected", [(single(-1, genus=2), (1,)), (special_chain(), (1, 1, 1))])
    def test_single_step_sequence(self, graph, expected):
        yau = yau_sequence(graph)

        assert yau.length == 1
        assert yau.yau_cycle == Cycle(expected)

    @pytest.mark.parametrize("graph", [b1ab2(), degree_one(), single(-1, genus=2), single(-2, genus=1)])
    def test_genus_identity(self, graph):
        yau = yau_sequence(graph)

        assert formulas.pa(graph, yau.yau_cycle) == yau.length * (yau.fundamental_genus - 1) + 1

    def test_rational_graph(self):
        with pytest.raises(DomainError):
            yau_sequence(chain(3))

    def test_summary_object(self):
        yau = YauData([Cycle((1, 1)), Cycle((1, 0))], Cycle((1, 0)), 1)

        assert yau.yau_cycle == Cycle((2, 1))
        assert yau.last == Cycle((1, 0))


class TestTyurinaComponent:
    def test_component_of_fundamental_cycle(self):
        assert tyurina_component(b1ab2(), Cycle((1, 1, 1)), Cycle((1, 0, 0))) == Cycle((1, 0, 0))

    def test_terminating_cycle(self):
        with pytest.raises(DomainError):
            tyurina_component(b1ab2(), Cycle((1, 0, 0)), Cycle((1, 0, 0)))


class TestBestMultiple:
    @pytest.mark.parametrize("graph, expected", [(b1ab2(), (1, 1)), (degree_one(), (1, 1)),
                                                 (single(-1, genus=2), (1, 2)), (single(-1, genus=1), (1, 1))])
    def test_best_multiple(self, graph, expected):
        assert best_multiple_of_yau(graph) == expected
