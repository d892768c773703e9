"""
Command line surface: dual-graph-cycles <command> [options] graph-file.

Every command but enumerate takes one graph file. Each prints one report on stdout (text by default, JSON with --json)
and exits with 0 on success, 1 when a check fails, 2 on bad input and 3 when an internal invariant is violated. The
diagnostic goes to stderr.
"""

import argparse
import logging
import os
import sys
from typing import List

from dual_graph_cycles.lattice import Cycle, is_minimal_resolution
from dual_graph_cycles.cycles import fundamental_cycle, is_chain_connected, minimal_model, decompose
from dual_graph_cycles.yau import yau_sequence, best_multiple_of_yau
from dual_graph_cycles.canonical import canonical_cycle, ratio_to
from dual_graph_cycles.classify import classify, star_layout
from dual_graph_cycles.oracle import pa_max, run_checks, enumerate_and_verify, CHECKS, CANONICAL_CHECKS
from dual_graph_cycles.graph_io import parse_file
from dual_graph_cycles.graph_io.debug_methods import to_dot
from dual_graph_cycles.reports import ReportBuilder, TextReport, JsonReport
from dual_graph_cycles.exceptions import InputError, DomainError, ResourceLimitError, InvariantError
from dual_graph_cycles import formulas

logger = logging.getLogger(__name__)

THEOREM_ALIASES = {
    "A": "canonical-degree-two",
    "B": "genus-degree-one",
    "C": "genus-degree-two",
    "3.2": "canonical-degree-one",
    "3.6": "canonical-general",
    "3.8": "classification",
    "3.9": "classification-tables",
}

COMMANDS = ("fundamental", "genus", "yau", "canonical", "classify", "pa-max", "verify", "enumerate", "dot")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


def _cycle_argument(text: str) -> Cycle:
    try:
        return Cycle(int(value) for value in text.replace(',', ' ').split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--no-check", action="store_true", help="don't reject graphs that aren't negative definite")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")

    parser = argparse.ArgumentParser(prog="dual-graph-cycles", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)

    commands = {}
    for command in COMMANDS:
        commands[command] = subparsers.add_parser(command, parents=[common])
        if command != "enumerate":
            commands[command].add_argument("graph", help="graph file in the text or JSON format")

    commands["genus"].add_argument("--cycle", type=_cycle_argument, default=None,
                                   help="also report p_a, chain-connectedness and the decomposition of this cycle")

    for command in ("canonical", "pa-max", "verify"):
        commands[command].add_argument("--bound", type=int, default=None, help="first box bound of the p_a search")

    commands["verify"].add_argument("--theorem", action="append", default=None,
                                    choices=sorted(CHECKS) + sorted(THEOREM_ALIASES),
                                    help="the check to run, repeatable. All checks by default.")

    enumerate_parser = commands["enumerate"]
    enumerate_parser.add_argument("--max-vertices", type=int, default=3, help="largest graph size")
    enumerate_parser.add_argument("--weights", type=int, nargs="+", default=[-1, -2, -3], help="weights of A")
    enumerate_parser.add_argument("--genera", type=int, nargs="+", default=[0, 1, 2], help="genera of A")
    enumerate_parser.add_argument("--workers", type=int, default=1, help="worker processes")
    enumerate_parser.add_argument("--progress", action="store_true", help="progress bar on stderr")
    enumerate_parser.add_argument("--reproducers", default=None, metavar="DIR",
                                  help="write every failing graph to this directory")
    return parser


def _fundamental(graph, builder, args):
    z, sequence = fundamental_cycle(graph)
    names = graph.names()
    z_squared = graph.matrix.bilinear(z, z)
    layout = star_layout(graph, z)

    builder.add("vertices", names)
    builder.add("fundamental_cycle", z)
    if layout is not None:
        builder.add("layout", layout)
    builder.add("computation_sequence", [names[sequence.start]] + [names[step] for step in sequence.steps])
    builder.add("self_intersection", z_squared)
    builder.add("degree", -z_squared)
    builder.add("fundamental_genus", formulas.pa(graph, z))


def _genus(graph, builder, args):
    z, _ = fundamental_cycle(graph)
    p_f = formulas.pa(graph, z)

    builder.add("fundamental_cycle", z)
    builder.add("fundamental_genus", p_f)
    builder.add("chi", formulas.chi(graph, z))
    builder.add("canonical_degree", formulas.canonical_degree(graph, z))
    builder.add("minimal_resolution", is_minimal_resolution(graph))

    if p_f > 0:
        builder.add("minimal_model", minimal_model(graph, z))

    if args.cycle is not None:
        cycle = args.cycle
        if len(cycle) != len(graph):
            raise InputError(f"--cycle has {len(cycle)} coefficients but the graph has {len(graph)} vertices")

        chain_connected = is_chain_connected(graph, cycle)
        builder.add("cycle", cycle)
        builder.add("cycle_genus", formulas.pa(graph, cycle))
        builder.add("chain_connected", chain_connected)

        if chain_connected and formulas.pa(graph, cycle) > 0:
            builder.add("cycle_minimal_model", minimal_model(graph, cycle))

        builder.add("decomposition", [f"{multiplicity} x ({part})" for part, multiplicity in decompose(graph, cycle)])


def _yau(graph, builder, args):
    yau = yau_sequence(graph)
    best_i, best_value = best_multiple_of_yau(graph, yau)

    builder.add("fundamental_genus", yau.fundamental_genus)
    builder.add("minimal_model", yau.z_min)
    builder.add("length", yau.length)
    builder.add("sequence", yau.sequence)
    builder.add("yau_cycle", yau.yau_cycle)
    builder.add("yau_genus", formulas.pa(graph, yau.yau_cycle))
    builder.add("last_is_minimal_model", yau.last_is_minimal_model())
    builder.add("best_multiple", best_i)
    builder.add("best_multiple_genus", best_value)


def _canonical(graph, builder, args):
    canonical = canonical_cycle(graph)
    z, _ = fundamental_cycle(graph)

    builder.add("canonical_cycle", canonical.z_k)
    builder.add("numerically_gorenstein", canonical.is_numerically_gorenstein)
    builder.add("common_denominator", canonical.z_k.common_denominator())

    if formulas.pa(graph, z) > 0:
        builder.add("ratio_to_yau_cycle", ratio_to(canonical.z_k, yau_sequence(graph).yau_cycle))

    for report in run_checks(graph, list(CANONICAL_CHECKS), args.bound):
        builder.add_check(report.to_dict())


def _classify(graph, builder, args):
    yau = yau_sequence(graph)
    result = classify(graph, yau)
    names = graph.names()

    builder.add("essentially_irreducible", result is not None)
    if result is None:
        return

    builder.add("special_vertex", names[result.special_vertex])
    builder.add("special_coefficient", result.k)
    builder.add("branches", [" ".join(names[i] for i in sorted(branch)) for branch in result.branches])
    builder.add("branch_types", [f"{t[0]}{t[1]}" if t else "-" for t in result.branch_types])
    builder.add("branch_products", result.branch_products)
    builder.add("negative_branches", result.negative_set)
    builder.add("gamma_prime", [names[i] for i in sorted(result.gamma_prime)])
    builder.add("branch_negativity", result.branch_negativity)
    builder.add("case", result.matched_case)

    if result.matched_case is not None:
        builder.add("parameters", result.parameters)
        builder.add("last_restricted", result.dm_restricted)
        builder.add("minimal_model_restricted", result.zmin_restricted)
        builder.add("table_last", result.table_dm)
        builder.add("table_minimal_model", result.table_zmin)
        builder.add("admissible", result.admissible)
    elif result.ambiguous:
        builder.add("ambiguous", True)


def _pa_max(graph, builder, args):
    result = pa_max(graph, args.bound)

    builder.add("value", result.value)
    builder.add("maximizer", result.maximizer)
    builder.add("box_bound", result.box_bound)
    builder.add("boundary_clear", result.boundary_clear)


def _verify(graph, builder, args):
    names = None if args.theorem is None else [THEOREM_ALIASES.get(name, name) for name in args.theorem]

    for report in run_checks(graph, names, args.bound):
        builder.add_check(report.to_dict())


GRAPH_COMMANDS = {
    "fundamental": _fundamental,
    "genus": _genus,
    "yau": _yau,
    "canonical": _canonical,
    "classify": _classify,
    "pa-max": _pa_max,
    "verify": _verify,
}


def _enumerate(builder, args) -> int:
    summary = enumerate_and_verify(args.max_vertices, args.weights, args.genera, workers=args.workers,
                                   progress=args.progress, reproducers=args.reproducers)

    builder.add("max_vertices", args.max_vertices)
    builder.add("graphs", summary.graph_count)
    builder.add("counts", {check: summary.counts[check] for check in sorted(summary.counts)})
    builder.add("failures", [f"{failure['report']['check']}" + (" (advisory)" if failure['report']['advisory'] else "")
                             for failure in summary.failures])
    builder.add("errors", [error["error"] for error in summary.errors])

    if summary.reproducers:
        builder.add("reproducers", summary.reproducers)

    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED


def run_command(args) -> int:
    interface = JsonReport if args.json else TextReport

    if args.command == "enumerate":
        builder = ReportBuilder(interface, args.command)
        code = _enumerate(builder, args)
        sys.stdout.write(builder.compile())
        return code

    graph = parse_file(args.graph, check=not args.no_check)

    if args.command == "dot":
        sys.stdout.write(to_dot(graph, name=os.path.splitext(os.path.basename(args.graph))[0]))
        return EXIT_OK

    builder = ReportBuilder(interface, args.command, os.path.basename(args.graph))
    GRAPH_COMMANDS[args.command](graph, builder, args)
    sys.stdout.write(builder.compile())
    return EXIT_CHECK_FAILED if builder.failed else EXIT_OK


def main(argv: List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        return run_command(args)
    except (InputError, DomainError, ResourceLimitError, OSError) as error:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InvariantError as error:
        logger.error("internal invariant violated in %s", args.command, exc_info=True)
        print(f"internal error: {error}", file=sys.stderr)
        return EXIT_INVARIANT
