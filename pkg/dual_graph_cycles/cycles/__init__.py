"""
The cycles sub-module computes fundamental cycles, chain-connectedness, minimal models and chain-connected
decompositions on a weighted dual graph.

specific maintenance notes:
    - Every search that enumerates subcycles is bounded by LIMITS["subcycles"] and raises ResourceLimitError past it.
    - Ties are always broken by the lowest vertex id so outputs are reproducible.
"""

from dual_graph_cycles.cycles._computation_sequence import ComputationSequence, fundamental_cycle, degree, \
    fundamental_genus
from dual_graph_cycles.cycles._chain_connected import count_subcycles, subcycles, is_chain_connected, \
    removable_curves, minimal_model
from dual_graph_cycles.cycles._decomposition import ChainDecomposition, decompose, exhaustive_decomposition
