"""
The oracle sub-module checks the fast algorithms against brute force, maximizes the arithmetic genus, and runs every
identity of the theory as an executable check over single graphs or whole enumerations.

specific maintenance notes:
    - Checks never pass on hypotheses that don't hold: they report not-applicable instead.
    - A failing non-advisory check on an enumerated graph is a bug in the library or in the theory. Keep the
      reproducer file.
"""

from dual_graph_cycles.oracle._report import TheoremReport, plain
from dual_graph_cycles.oracle._brute_force import anti_nef_minimum, minimal_model_by_search, tyurina_by_search, \
    pa_max_exhaustive
from dual_graph_cycles.oracle._pa_max import PaMaxResult, pa_max
from dual_graph_cycles.oracle._theorems import GraphFacts, CHECKS, CANONICAL_CHECKS, run_checks, \
    check_canonical_theorems, verify_theorem_B, verify_theorem_C, summarize
from dual_graph_cycles.oracle._enumeration import labelled_branches, special_graphs, enumerate_graphs, \
    EnumerationSummary, verify_graphs, enumerate_and_verify
