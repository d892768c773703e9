import warnings
from typing import Optional

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.classify._essential import essential_irreducibility
from dual_graph_cycles.classify._gamma_prime import ClassificationResult, extract_gamma_prime
from dual_graph_cycles.classify._templates import find_matches, prop39_tables
from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.yau import YauData, yau_sequence
from dual_graph_cycles.exceptions import DomainError
from dual_graph_cycles import formulas


def match_theorem38(graph: WeightedDualGraph, cr: ClassificationResult, yau: YauData) -> Optional[tuple]:
    """
    Match Gamma' (shape, edge multiplicities and coefficients of Z) against the eight template families. The result is
    stored on cr as well.

    :return: (case, parameters, mapping) for a unique match, None otherwise (cr.ambiguous tells the two apart).
    """
    if yau.length <= 1:
        raise DomainError("Gamma' is only classified when the Yau sequence is longer than one.")

    z = yau.fundamental
    if graph.matrix.bilinear(z, z) != -2:
        raise DomainError("Gamma' is only classified for degree two.")

    matches = find_matches(cr.gamma_prime_graph(graph))
    cr.ambiguous = len(matches) > 1

    if len(matches) != 1:
        return None

    template, mapping = matches[0]["template"], matches[0]["mapping"]
    cr.matched_case = template.case
    cr.parameters = dict(template.parameters)
    cr.mapping = mapping
    return cr.matched_case, cr.parameters, mapping


def _to_cycle(size: int, values: dict, mapping: dict) -> Cycle:
    coefficients = [0] * size
    for node, value in values.items():
        coefficients[mapping[node]] = value

    return Cycle(coefficients)


def classify(graph: WeightedDualGraph, yau: YauData = None, verification=False) -> Optional[ClassificationResult]:
    """
    Run the whole classification pipeline: essential irreducibility, Gamma', and, for degree two with m > 1, the
    template match and the D_m / Z_min tables next to the computed restrictions.

    :param graph: the dual graph. Must have p_f > 0.
    :param yau: the Yau sequence, if already known.
    :param verification: in verification mode an unmatched Gamma' is left to the caller; otherwise it's a warning.
    :return: None when Z isn't essentially irreducible.
    """
    z, _ = fundamental_cycle(graph)

    if formulas.pa(graph, z) <= 0:
        raise DomainError("Classification needs p_f > 0.")

    yau = yau_sequence(graph) if yau is None else yau
    ei = essential_irreducibility(graph, z)

    if not ei:
        return None

    cr = extract_gamma_prime(graph, ei, yau, z)

    if yau.length <= 1 or graph.matrix.bilinear(z, z) != -2:
        return cr

    cr.dm_restricted = yau.last.restrict(cr.gamma_prime)
    cr.zmin_restricted = yau.z_min.restrict(cr.gamma_prime)
    cr.dm_equals_zmin = yau.last_is_minimal_model()

    if match_theorem38(graph, cr, yau) is None:
        if not verification:
            warnings.warn(f"Gamma' on {sorted(cr.gamma_prime)} matches {'several' if cr.ambiguous else 'no'} "
                          f"template(s).")
        return cr

    table_dm, table_zmin, admissible = prop39_tables(cr.matched_case, cr.parameters)
    cr.table_dm = _to_cycle(len(graph), table_dm, cr.mapping)
    cr.table_zmin = _to_cycle(len(graph), table_zmin, cr.mapping)
    cr.admissible = admissible
    return cr
