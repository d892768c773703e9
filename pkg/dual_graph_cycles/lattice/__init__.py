"""
The lattice sub-module holds the weighted dual graph, its intersection form and the cycles living on it.

specific maintenance notes:
    - Graphs and cycles are treated as immutable values. Never mutate coefficients in place, build a new Cycle.
    - No floating point anywhere. Rational quantities are fractions.Fraction.
"""

from dual_graph_cycles.lattice._vertex import VertexData
from dual_graph_cycles.lattice._cycle import Cycle, RationalCycle
from dual_graph_cycles.lattice._matrix import IntersectionMatrix, DefinitenessCertificate
from dual_graph_cycles.lattice._graph import WeightedDualGraph, check_negative_definite, intersect, is_anti_nef_on, \
    is_numerically_trivial_on, is_minimal_resolution
