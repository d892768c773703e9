"""
Exhaustive generation of small dual graphs, and the harness that runs every check over them.

Two families are generated:
    - special graphs: one special vertex A with the chosen weight and genus, every other vertex a rational (-2)-curve.
      Deleting A leaves ADE trees, so a graph is a multiset of ADE trees whose vertices are labelled with their edge
      multiplicity to A. Isomorphism classes are told apart by a canonical encoding of the labelled trees. Each
      labelled branch raises the Schur complement of A by a fixed positive amount, so multisets that already break
      negative definiteness are cut off before they grow.
    - general graphs: any connected graph from the networkx atlas with any vertex data and multiplicities. Duplicates
      are removed by keeping only the lexicographically smallest labelling in each automorphism orbit. Labellings are
      filled vertex by vertex and abandoned at the first leading principal minor of the wrong sign.
"""

import itertools
import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from tqdm import tqdm

from dual_graph_cycles.lattice import VertexData, WeightedDualGraph, IntersectionMatrix
from dual_graph_cycles.oracle._theorems import run_checks, CHECKS
from dual_graph_cycles.graph_io import to_text
from dual_graph_cycles.exceptions import InputError, DomainError, ResourceLimitError, InvariantError
from dual_graph_cycles import LIMITS

logger = logging.getLogger(__name__)

ATLAS_VERTICES = 7


def _ade_trees(size: int) -> List[nx.Graph]:
    """Every connected ADE Dynkin diagram with the given number of vertices"""
    trees = [nx.path_graph(size)]

    if size >= 4:
        d_tree = nx.path_graph(size - 1)
        d_tree.add_edge(size - 3, size - 1)
        trees.append(d_tree)

    if size in (6, 7, 8):
        e_tree = nx.path_graph(size - 1)
        e_tree.add_edge(2, size - 1)
        trees.append(e_tree)

    return trees


def _rooted_code(tree: nx.Graph, labels, node, parent) -> str:
    children = sorted(_rooted_code(tree, labels, child, node) for child in tree.neighbors(node) if child != parent)
    return f"({labels[node]}{''.join(children)})"


def _tree_code(tree: nx.Graph, labels) -> str:
    return min(_rooted_code(tree, labels, root, None) for root in tree.nodes)


def labelled_branches(size: int) -> List[Tuple[str, nx.Graph, tuple]]:
    """
    Every ADE tree of the given size with each vertex labelled 0, 1 or 2 (its multiplicity to A), at least one label
    non-zero, up to isomorphism of labelled trees. Sorted by canonical code.
    """
    seen = {}

    for tree in _ade_trees(size):
        for labels in itertools.product(range(3), repeat=size):
            if not any(labels):
                continue

            code = _tree_code(tree, labels)
            if code not in seen:
                seen[code] = (code, tree, labels)

    return [seen[code] for code in sorted(seen)]


def _partitions(total: int, largest: int = None) -> Iterator[List[int]]:
    largest = total if largest is None else largest
    if total == 0:
        yield []
        return

    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def _branch_cost(tree: nx.Graph, labels) -> Fraction:
    # -l^T M^-1 l for the branch matrix M and the multiplicities l to A. Always positive.
    nodes = sorted(tree.nodes)
    matrix = [[-2 if a == b else int(tree.has_edge(a, b)) for b in nodes] for a in nodes]
    solution = IntersectionMatrix(matrix).solve([labels[node] for node in nodes])

    return -sum(value * labels[node] for value, node in zip(solution, nodes))


@lru_cache(maxsize=None)
def _costed_branches(size: int) -> tuple:
    return tuple((code, tree, labels, _branch_cost(tree, labels)) for code, tree, labels in labelled_branches(size))


def _branch_multisets(total: int, budget=None) -> Iterator[Tuple[list, Fraction]]:
    """
    Multisets of labelled branches whose sizes add up to total, each with its summed cost. A graph made of A and the
    branches is negative definite exactly when A . A + cost < 0, so multisets costing budget or more are never built.
    """
    catalogue = [branch for size in range(total, 0, -1) for branch in _costed_branches(size)]

    def extend(start, remaining, cost, chosen):
        if remaining == 0:
            yield list(chosen), cost
            return

        for index in range(start, len(catalogue)):
            branch = catalogue[index]
            if len(branch[2]) > remaining or (budget is not None and cost + branch[3] >= budget):
                continue

            chosen.append(branch)
            yield from extend(index, remaining - len(branch[2]), cost + branch[3], chosen)
            chosen.pop()

    yield from extend(0, total, Fraction(0), [])


def _build_special_graph(special: VertexData, branches) -> WeightedDualGraph:
    vertices = [special]
    edges = []

    for _, tree, labels, _ in branches:
        offset = len(vertices)
        for node in sorted(tree.nodes):
            vertices.append(VertexData(-2, name=f"B{offset + node}"))
            if labels[node]:
                edges.append((0, offset + node, labels[node]))
        edges.extend((offset + a, offset + b, 1) for a, b in sorted(tree.edges))

    return WeightedDualGraph(vertices, edges, check=False)


def _check_vertices(max_vertices: int, limit: int):
    if not 1 <= max_vertices <= limit:
        raise InputError(f"max_vertices must lie in 1..{limit}, not {max_vertices}. Raise "
                         f"LIMITS['enumeration_vertices'] to go further.")


def special_graphs(max_vertices: int, special_weights: Iterable[int], special_genera: Iterable[int]) \
        -> Iterator[WeightedDualGraph]:
    """
    Every connected negative definite graph with at most max_vertices vertices, exactly one special vertex A (named
    "A", id 0) and rational (-2)-curves elsewhere, up to isomorphism. A rational (-2)- or (-1)-curve is never special.

    :param special_weights: weights for A, each in LIMITS["min_special_weight"]..-1.
    :param special_genera: genera for A.
    """
    _check_vertices(max_vertices, LIMITS["enumeration_vertices"])
    weights, genera = sorted(set(special_weights), reverse=True), sorted(set(special_genera))

    for weight in weights:
        if not LIMITS["min_special_weight"] <= weight <= -1:
            raise InputError(f"Special weights must lie in {LIMITS['min_special_weight']}..-1, not {weight}")
    if any(genus < 0 for genus in genera):
        raise InputError(f"Genera must be non-negative, not {genera}")

    specials = [VertexData(weight, genus, name="A") for weight in weights for genus in genera
                if not (genus == 0 and weight in (-1, -2))]

    if not specials:
        return

    budget = max(-special.weight for special in specials)

    for n in range(1, max_vertices + 1):
        for branches, cost in _branch_multisets(n - 1, budget):
            for special in specials:
                if special.weight + cost < 0:
                    yield _build_special_graph(special, branches)

        logger.debug("special graphs with %d vertices done", n)


def _orbit_minimal(assignment: tuple, automorphisms: List[Dict], edge_order: List[tuple], edge_position: Dict,
                   n: int) -> bool:
    vertex_part, edge_part = assignment[:n], assignment[n:]

    for mapping in automorphisms:
        image_vertices = [None] * n
        for node in range(n):
            image_vertices[mapping[node]] = vertex_part[node]

        image_edges = [None] * len(edge_order)
        for i, (a, b) in enumerate(edge_order):
            image = (mapping[a], mapping[b]) if mapping[a] < mapping[b] else (mapping[b], mapping[a])
            image_edges[edge_position[image]] = edge_part[i]

        if tuple(image_vertices) + tuple(image_edges) < assignment:
            return False

    return True


def _definite_assignments(shape: nx.Graph, vertex_data: List[Tuple[int, int]], max_multiplicity: int,
                          edge_order: List[tuple]) -> Iterator[tuple]:
    """
    Vertex data indices followed by edge multiplicities in edge_order, for every labelling of shape whose intersection
    form is negative definite. Vertices are filled in order and a branch stops as soon as its leading principal minor
    has the wrong sign, which no later vertex can repair.
    """
    n = shape.number_of_nodes()
    earlier = [[a for a in range(k) if shape.has_edge(a, k)] for k in range(n)]
    matrix = [[0] * n for _ in range(n)]
    data = [0] * n
    multiplicity = {}

    def extend(k):
        if k == n:
            yield tuple(data) + tuple(multiplicity[edge] for edge in edge_order)
            return

        for index, (weight, _) in enumerate(vertex_data):
            data[k] = index
            matrix[k][k] = weight

            for values in itertools.product(range(1, max_multiplicity + 1), repeat=len(earlier[k])):
                for a, value in zip(earlier[k], values):
                    matrix[a][k] = matrix[k][a] = value
                    multiplicity[(a, k)] = value

                if IntersectionMatrix([row[:k + 1] for row in matrix[:k + 1]]).definiteness_certificate():
                    yield from extend(k + 1)

    yield from extend(0)


def enumerate_graphs(max_vertices: int, weights: Iterable[int], genera: Iterable[int], max_multiplicity: int = 2) \
        -> Iterator[WeightedDualGraph]:
    """
    Every connected negative definite graph with at most max_vertices vertices, vertex weights from weights, genera
    from genera and edge multiplicities up to max_multiplicity, up to isomorphism.
    """
    _check_vertices(max_vertices, min(ATLAS_VERTICES, LIMITS["enumeration_vertices"]))
    vertex_data = [(weight, genus) for weight in sorted(set(weights), reverse=True) for genus in sorted(set(genera))]

    for weight, genus in vertex_data:
        VertexData(weight, genus)

    for shape in nx.graph_atlas_g():
        n = shape.number_of_nodes()
        if n == 0 or n > max_vertices or not nx.is_connected(shape):
            continue

        edge_order = sorted(tuple(sorted(edge)) for edge in shape.edges)
        edge_position = {edge: i for i, edge in enumerate(edge_order)}
        automorphisms = list(GraphMatcher(shape, shape).isomorphisms_iter())

        for assignment in _definite_assignments(shape, vertex_data, max_multiplicity, edge_order):
            if not _orbit_minimal(assignment, automorphisms, edge_order, edge_position, n):
                continue

            vertices = [VertexData(*vertex_data[index], name=f"E{i}") for i, index in enumerate(assignment[:n])]
            edges = [(a, b, m) for (a, b), m in zip(edge_order, assignment[n:])]
            yield WeightedDualGraph(vertices, edges, check=False)


class EnumerationSummary:
    """
    The EnumerationSummary class aggregates the reports of a verification run: per check, how many graphs got each
    verdict; every failing report with the graph that produced it; and every graph on which a computation raised.
    """

    __slots__ = 'graph_count', 'counts', 'failures', 'errors', 'reproducers'

    def __init__(self):
        self.graph_count = 0
        self.counts = {}  # type: Dict[str, Dict[str, int]]
        self.failures = []  # type: List[dict]
        self.errors = []  # type: List[dict]
        self.reproducers = []  # type: List[str]

    def __repr__(self):
        return f"EnumerationSummary({self.graph_count} graphs, {len(self.failures)} failures, " \
               f"{len(self.errors)} errors)"

    def add(self, graph_text: str, reports: List[dict], error: str = None):
        self.graph_count += 1

        if error is not None:
            self.errors.append({"graph": graph_text, "error": error})
            return

        for report in reports:
            verdicts = self.counts.setdefault(report["check"], {"pass": 0, "fail": 0, "not-applicable": 0})
            verdicts[report["verdict"]] += 1

            if report["verdict"] == "fail":
                self.failures.append({"graph": graph_text, "report": report})

    @property
    def blocking_failures(self) -> List[dict]:
        return [failure for failure in self.failures if not failure["report"]["advisory"]]

    @property
    def ok(self) -> bool:
        return not self.blocking_failures and not self.errors

    def to_dict(self) -> dict:
        return {
            "graphs": self.graph_count,
            "counts": {check: dict(sorted(verdicts.items())) for check, verdicts in sorted(self.counts.items())},
            "failures": self.failures,
            "errors": self.errors,
            "reproducers": self.reproducers,
        }


def _verify_one(job) -> Tuple[str, List[dict], str]:
    graph, names = job
    text = to_text(graph)

    try:
        reports = run_checks(graph, names)
    except (DomainError, ResourceLimitError, InvariantError) as error:
        logger.warning("checks raised on\n%s%s: %s", text, type(error).__name__, error)
        return text, [], f"{type(error).__name__}: {error}"

    return text, [report.to_dict() for report in reports], None


def _write_reproducers(summary: EnumerationSummary, directory: str):
    os.makedirs(directory, exist_ok=True)
    broken = [(failure["report"]["check"], failure["graph"]) for failure in summary.failures]
    broken += [("error", error["graph"]) for error in summary.errors]

    for i, (check, text) in enumerate(broken):
        path = os.path.join(directory, f"{i:04d}-{check}.graph")
        with open(path, 'w') as file:
            file.write(text)
        summary.reproducers.append(path)


def verify_graphs(graphs: Iterable[WeightedDualGraph], names: List[str] = None, workers: int = 1, progress=False,
                  reproducers: str = None) -> EnumerationSummary:
    """
    Run the checks on every graph and aggregate the reports. The summary doesn't depend on the number of workers.

    :param names: the checks to run, all of them by default.
    :param workers: processes to spread the graphs over. 1 runs everything in this process.
    :param progress: whether or not to show a tqdm progress bar on stderr.
    :param reproducers: a directory to write one graph file per failure or error into.
    """
    names = list(CHECKS) if names is None else list(names)
    jobs = [(graph, names) for graph in graphs]
    summary = EnumerationSummary()

    if not jobs:
        warnings.warn("No graphs to verify.")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(_verify_one, jobs, chunksize=16)
            for text, reports, error in tqdm(results, total=len(jobs), disable=not progress):
                summary.add(text, reports, error)
    else:
        for job in tqdm(jobs, disable=not progress):
            summary.add(*_verify_one(job))

    if reproducers is not None and (summary.failures or summary.errors):
        _write_reproducers(summary, reproducers)

    return summary


def enumerate_and_verify(max_vertices: int, special_weights: Iterable[int], special_genera: Iterable[int],
                         names: List[str] = None, workers: int = 1, progress=False, reproducers: str = None) \
        -> EnumerationSummary:
    """Generate every special graph up to max_vertices vertices and run the checks on each. (Wrapper for
    verify_graphs)"""
    graphs = special_graphs(max_vertices, special_weights, special_genera)
    summary = verify_graphs(graphs, names, workers, progress, reproducers)

    logger.debug("verified %d graphs: %d failures, %d errors", summary.graph_count, len(summary.failures),
                 len(summary.errors))
    return summary
