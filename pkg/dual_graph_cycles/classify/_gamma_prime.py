from typing import List, Optional

import networkx as nx

from dual_graph_cycles.lattice import WeightedDualGraph, Cycle
from dual_graph_cycles.classify._essential import EssentialIrreducibility
from dual_graph_cycles.classify._ade import recognize_ade
from dual_graph_cycles.cycles import fundamental_cycle
from dual_graph_cycles.yau import YauData
from dual_graph_cycles.exceptions import DomainError


class ClassificationResult:
    """
    The ClassificationResult class collects everything known about the branches of the graph around the special vertex
    A: the branches left after deleting A, their ADE types, the set S of branches whose restricted fundamental cycle
    meets Z negatively, and Gamma' = A together with the branches in S.

    The template fields (matched_case onwards) are filled in by classify().
    """

    __slots__ = ('special_vertex', 'k', 'branches', 'branch_types', 'branch_products', 'negative_set', 'gamma_prime',
                 'z_restricted', 'branch_negativity', 'matched_case', 'parameters', 'mapping', 'ambiguous',
                 'dm_restricted', 'zmin_restricted', 'dm_equals_zmin', 'table_dm', 'table_zmin', 'admissible')

    def __init__(self, special_vertex: int, k: int, branches: List[frozenset], branch_types: list,
                 branch_products: List[int], negative_set: List[int], gamma_prime: frozenset, z_restricted: Cycle,
                 branch_negativity: Optional[bool] = None):
        self.special_vertex = special_vertex
        self.k = k
        self.branches = branches
        self.branch_types = branch_types
        self.branch_products = branch_products
        self.negative_set = negative_set
        self.gamma_prime = gamma_prime
        self.z_restricted = z_restricted
        self.branch_negativity = branch_negativity

        self.matched_case = None
        self.parameters = {}
        self.mapping = {}
        self.ambiguous = False
        self.dm_restricted = None
        self.zmin_restricted = None
        self.dm_equals_zmin = None
        self.table_dm = None
        self.table_zmin = None
        self.admissible = None

    def __repr__(self):
        return f"ClassificationResult(A={self.special_vertex}, S={self.negative_set}, " \
               f"gamma_prime={sorted(self.gamma_prime)}, case={self.matched_case})"

    def all_branches_ade(self) -> bool:
        return all(branch_type is not None for branch_type in self.branch_types)

    def gamma_prime_graph(self, graph: WeightedDualGraph) -> nx.Graph:
        """Gamma' as a networkx graph labelled with role ("A" or "B") and the coefficient of Z on every node."""
        subgraph = nx.Graph(graph.to_networkx().subgraph(self.gamma_prime))
        for node in subgraph.nodes:
            subgraph.nodes[node]["role"] = "A" if node == self.special_vertex else "B"
            subgraph.nodes[node]["z"] = self.z_restricted[node]

        return subgraph


def extract_gamma_prime(graph: WeightedDualGraph, ei: EssentialIrreducibility, yau: YauData = None,
                        z: Cycle = None) -> ClassificationResult:
    """
    Delete A, split the rest into branches and keep the ones meeting Z negatively.

    :param graph: the dual graph.
    :param ei: an essential irreducibility witness that holds.
    :param yau: when given with m > 1, branch_negativity records whether S is exactly the set of branches meeting
    the support of Z - D_m.
    :param z: the fundamental cycle, if already known.
    """
    if not ei.holds:
        raise DomainError("Gamma' is only defined when Z is essentially irreducible.")

    if z is None:
        z, _ = fundamental_cycle(graph)

    special = ei.special_vertex
    branches = graph.components(set(range(len(graph))) - {special})
    branch_types = [recognize_ade(graph, branch) for branch in branches]
    branch_products = [graph.matrix.bilinear(z.restrict(branch), z) for branch in branches]
    negative_set = [i for i, product in enumerate(branch_products) if product < 0]

    gamma_prime = frozenset({special}.union(*(branches[i] for i in negative_set)))

    branch_negativity = None
    if yau is not None and yau.length > 1:
        tail = (z - yau.last).support()
        meeting = [i for i, branch in enumerate(branches) if branch & tail]
        branch_negativity = meeting == negative_set and all(t is not None for t in branch_types)

    return ClassificationResult(special, ei.k, branches, branch_types, branch_products, negative_set, gamma_prime,
                                z.restrict(gamma_prime), branch_negativity)
