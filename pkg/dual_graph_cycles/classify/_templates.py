"""
The eight families of Gamma' with their fundamental cycle patterns, for degree two graphs with essentially irreducible Z
and a Yau sequence longer than one.

Every family is built as a small networkx graph whose nodes carry a role ("A" for the special vertex, "B" for a
(-2)-curve) and the coefficient z of the fundamental cycle. Each template also carries the restrictions of D_m and
Z_min to Gamma' and whether the two agree.

specific maintenance notes:
    - Node names inside a template are local ("a", "b1", "c", "t", "r", ...). They only matter through the mapping
      returned by a match.
    - Long D arms are numbered from the far end: b1 is the end of the long arm, the node is position L + 1.
"""

import logging
from typing import Dict, Iterator, List, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from dual_graph_cycles.exceptions import DomainError

logger = logging.getLogger(__name__)

CASES = range(1, 9)


class Template:
    __slots__ = 'case', 'parameters', 'graph', 'dm', 'zmin'

    def __init__(self, case: int, parameters: dict):
        self.case = case
        self.parameters = parameters
        self.graph = nx.Graph()
        self.dm = {}
        self.zmin = {}

    def __repr__(self):
        return f"Template(case={self.case}, parameters={self.parameters})"

    def add(self, node: str, z: int, dm: int = 0, zmin: int = 0, role="B"):
        self.graph.add_node(node, role=role, z=z)
        self.dm[node] = dm
        self.zmin[node] = zmin

    def join(self, first: str, second: str, multiplicity=1):
        self.graph.add_edge(first, second, multiplicity=multiplicity)

    def path(self, nodes: List[str]):
        for first, second in zip(nodes, nodes[1:]):
            self.join(first, second)

    @property
    def admissible(self) -> bool:
        return self.dm == self.zmin

    def size(self) -> int:
        return self.graph.number_of_nodes()


def _arm(prefix: str, length: int) -> List[str]:
    return [f"{prefix}{j}" for j in range(1, length + 1)]


def two_chains(m_prime: int, n_prime: int) -> Template:
    """Two (-2)-chains hanging off A by an end, everything with coefficient 1. m' >= n'."""
    template = Template(1, {"m_prime": m_prime, "n_prime": n_prime})
    template.add("a", 1, 1, 1, role="A")

    long_arm, short_arm = _arm("p", m_prime), _arm("q", n_prime)
    for j, node in enumerate(long_arm, start=1):
        template.add(node, 1, dm=int(j <= m_prime - n_prime))
    for node in short_arm:
        template.add(node, 1)

    template.path(["a"] + long_arm)
    template.path(["a"] + short_arm)
    return template


def chain_at_end(n_prime: int, edge: str) -> Template:
    """A attached to the end of an A_n' chain: 1 2 ... 2 and A = 2 (simple edge) or 1 (double edge)."""
    template = Template(2, {"n_prime": n_prime, "edge": edge})
    a_value = 2 if edge == "single" else 1
    template.add("a", a_value, a_value, a_value, role="A")

    chain = _arm("b", n_prime)
    for j, node in enumerate(chain, start=1):
        if n_prime % 2:
            dm = int(j == n_prime)
        else:
            dm = {n_prime - 1: 1, n_prime: 2}.get(j, 0)
        template.add(node, 1 if j == 1 else 2, dm=dm, zmin=int(j == n_prime))

    template.path(chain)
    template.join(chain[-1], "a", 1 if edge == "single" else 2)
    return template


def chain_next_to_end(n_prime: int) -> Template:
    """A attached to the second vertex from one end of an A_n' chain: 1 2 ... 2 (t = 1) and A = 1."""
    template = Template(3, {"n_prime": n_prime})
    template.add("a", 1, 1, 1, role="A")

    chain = _arm("b", n_prime - 1)
    even = n_prime % 2 == 0
    for j, node in enumerate(chain, start=1):
        template.add(node, 1 if j == 1 else 2, dm=int(even and j == n_prime - 1))
    template.add("t", 1, dm=int(even))

    template.path(chain + ["t"])
    template.join(chain[-1], "a")
    return template


def _d_shape(template: Template, n_prime: int, z_arm, dm_arm, z_fork, dm_fork):
    # Long arm b1..bL, node c at position L + 1, fork ends t and r.
    long_arm = _arm("b", n_prime - 3) + ["c"]
    for j, node in enumerate(long_arm, start=1):
        template.add(node, z_arm(j), dm_arm(j), dm_arm(j))
    template.add("t", z_fork[0], dm_fork[0], dm_fork[0])
    template.add("r", z_fork[1], dm_fork[1], dm_fork[1])

    template.path(long_arm)
    template.join("c", "t")
    template.join("c", "r")
    return long_arm


def d_on_long_arm(n_prime: int, k_prime: int) -> Template:
    """A attached to position k' + 1 of the long arm of D_n' (the node when k' = n' - 3). k' is even."""
    template = Template(4, {"n_prime": n_prime, "k_prime": k_prime})
    template.add("a", 1, 1, 1, role="A")

    half = (k_prime + 2) // 2
    long_arm = _d_shape(template, n_prime,
                        z_arm=lambda j: min(j + 1, k_prime + 2),
                        dm_arm=lambda j: max(0, min(j - 1, k_prime)),
                        z_fork=(half, half), dm_fork=(half - 1, half - 1))

    template.join(long_arm[k_prime], "a")
    return template


def d_on_fork_end(n_prime: int, edge: str) -> Template:
    """A attached to one fork end of D_n', n' odd: 2 3 ... (n'-1)/2 over n'-1, then (n'+1)/2."""
    template = Template(5, {"n_prime": n_prime, "edge": edge})
    a_value = 2 if edge == "single" else 1
    template.add("a", a_value, a_value, a_value, role="A")

    _d_shape(template, n_prime,
             z_arm=lambda j: j + 1,
             dm_arm=lambda j: j - 1,
             z_fork=((n_prime - 1) // 2, (n_prime + 1) // 2),
             dm_fork=((n_prime - 3) // 2, (n_prime - 1) // 2))

    template.join("r", "a", 1 if edge == "single" else 2)
    return template


def d_on_both_fork_ends(n_prime: int) -> Template:
    """A attached to both fork ends of D_n', n' even."""
    template = Template(6, {"n_prime": n_prime})
    template.add("a", 1, 1, 1, role="A")

    _d_shape(template, n_prime,
             z_arm=lambda j: j + 1,
             dm_arm=lambda j: j - 1,
             z_fork=(n_prime // 2, n_prime // 2),
             dm_fork=((n_prime - 2) // 2, (n_prime - 2) // 2))

    template.join("t", "a")
    template.join("r", "a")
    return template


def e6_at_long_end() -> Template:
    """A attached to the end of a long arm of E6: 2 3 (2 over 4) 3 2."""
    template = Template(7, {})
    template.add("a", 1, 1, 1, role="A")

    for node, z in (("l2", 2), ("l1", 3), ("c", 4), ("u", 2), ("r1", 3), ("r2", 2)):
        template.add(node, z)

    template.path(["l2", "l1", "c", "r1", "r2", "a"])
    template.join("c", "u")
    return template


def d5_exception() -> Template:
    """The D5 graph of the odd fork family with pattern 1 2 (2 over 3) 2 instead."""
    template = Template(8, {})
    template.add("a", 1, 1, 1, role="A")

    for node, z, dm in (("b1", 1, 1), ("b2", 2, 1), ("c", 3, 1), ("t", 2, 0), ("r", 2, 1)):
        template.add(node, z, dm=dm)

    template.path(["b1", "b2", "c", "r", "a"])
    template.join("c", "t")
    return template


def build_template(case: int, parameters: dict) -> Template:
    """Rebuild a template from its case number and parameters."""
    builders = {
        1: lambda: two_chains(parameters["m_prime"], parameters["n_prime"]),
        2: lambda: chain_at_end(parameters["n_prime"], parameters["edge"]),
        3: lambda: chain_next_to_end(parameters["n_prime"]),
        4: lambda: d_on_long_arm(parameters["n_prime"], parameters["k_prime"]),
        5: lambda: d_on_fork_end(parameters["n_prime"], parameters["edge"]),
        6: lambda: d_on_both_fork_ends(parameters["n_prime"]),
        7: e6_at_long_end,
        8: d5_exception,
    }

    if case not in builders:
        raise DomainError(f"There is no template case {case!r}")

    return builders[case]()


def templates_of_size(size: int) -> Iterator[Template]:
    """Every template with exactly size vertices, A included."""
    n_prime = size - 1

    for short in range(1, size):
        long = size - 1 - short
        if long >= short:
            yield two_chains(long, short)

    if n_prime >= 3:
        yield chain_at_end(n_prime, "single")
        yield chain_at_end(n_prime, "double")
        yield chain_next_to_end(n_prime)

    if n_prime >= 4:
        for k_prime in range(0, n_prime - 2, 2):
            yield d_on_long_arm(n_prime, k_prime)

        if n_prime % 2:
            yield d_on_fork_end(n_prime, "single")
            yield d_on_fork_end(n_prime, "double")
        else:
            yield d_on_both_fork_ends(n_prime)

    if size == 7:
        yield e6_at_long_end()

    if size == 6:
        yield d5_exception()


def _node_match(template_node, actual_node):
    return template_node["role"] == actual_node["role"] and template_node["z"] == actual_node["z"]


def _edge_match(template_edge, actual_edge):
    return template_edge["multiplicity"] == actual_edge["multiplicity"]


def find_matches(gamma_prime: nx.Graph) -> List[Dict]:
    """
    Compare a labelled Gamma' against every template of its size.

    :return: a list of {"template": Template, "mapping": {template node: vertex id}} for every template that matches
    both shape and coefficients.
    """
    matches = []

    for template in templates_of_size(gamma_prime.number_of_nodes()):
        matcher = isomorphism.GraphMatcher(template.graph, gamma_prime, node_match=_node_match,
                                           edge_match=_edge_match)
        if matcher.is_isomorphic():
            matches.append({"template": template, "mapping": dict(matcher.mapping)})

    logger.debug("gamma prime with %d vertices matched %s", gamma_prime.number_of_nodes(),
                 [match["template"] for match in matches])
    return matches


def prop39_tables(case: int, parameters: dict) -> Optional[tuple]:
    """
    The restrictions of D_m and Z_min to Gamma' for a template case, keyed by template node, and whether they agree.

    :return: (dm_restricted, zmin_restricted, admissible)
    """
    template = build_template(case, parameters)
    return dict(template.dm), dict(template.zmin), template.admissible
