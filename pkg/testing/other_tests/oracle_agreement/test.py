from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.oracle import anti_nef_minimum, pa_max, pa_max_exhaustive
from dual_graph_cycles import LIMITS
from testing.other_tests._load import load

EXHAUSTIVE_VERTICES = 4


def run_test(graph_file_name):
    graph = load(graph_file_name)
    if graph is None:
        return True

    z, _ = fundamental_cycle(graph)

    if max(z) ** len(graph) <= LIMITS["subcycles"] and anti_nef_minimum(graph, max(z)) != z:
        print("Laufer's algorithm disagrees with the anti-nef minimum:", z)
        return False

    if len(graph) <= EXHAUSTIVE_VERTICES:
        result = pa_max(graph)
        value, maximizer = pa_max_exhaustive(graph, 6)

        if (result.value, result.maximizer) != (value, maximizer):
            print("pa_max disagrees with exhaustive search:", result, value, maximizer)
            return False

    return True
