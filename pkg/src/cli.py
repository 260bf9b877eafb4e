"""
Command-line front end
Sub-commands generate instances, evaluate revenues, solve, compute Shapley
payments, run best-response dynamics, enumerate equilibria and run the
independent-set pipeline. Reports go to standard output as JSON or CSV.

Exit codes: 0 on success, 1 on a domain or I/O error, 2 on a usage error.
"""

import argparse
import logging
import sys
from fractions import Fraction
from functools import partial
from typing import List, Optional

from .algorithms.exhaustive_search import solve_exact
from .config import Limits
from .dsp_instance import DSPInstance
from .dsp_solver import METHODS, DSPSolver
from .exceptions import DSPError, SchemaError
from .generators.mis_reduction import gen_mis_reduction, run_mis_pipeline
from .generators.named_instances import gen_dspn, gen_identity
from .generators.random_instances import gen_random
from .mechanism.dynamics import run_brd
from .mechanism.equilibria import enumerate_equilibria, poa_pos, value_table
from .mechanism.game import DSPGame
from .mechanism.shapley import PAYMENT_RULES, potential
from .solution import Solution
from .utils.instance_io import (instance_to_document, load_graph, load_instance,
                                load_profile, save_instance)
from .utils.rationals import parse_rational
from .utils.reports import Report

logger = logging.getLogger(__name__)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except SchemaError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _order(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated player list, got {text!r}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="report format (default: json)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for large enumerations (default: all cores)")
    common.add_argument("--deterministic", dest="deterministic", action="store_true", default=True,
                        help="omit timings so identical runs print identical bytes (default)")
    common.add_argument("--no-deterministic", dest="deterministic", action="store_false",
                        help="include elapsed times in reports")
    common.add_argument("--max-profiles", type=int, default=None,
                        help="cap on the number of enumerated profiles")
    common.add_argument("--max-parts", type=int, default=None,
                        help="cap on the parts of a partition whose coarsenings are enumerated")
    common.add_argument("--progress", action="store_true",
                        help="progress bar on stderr during exhaustive search")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="dsplab",
                                     description="Distributed signaling games over second-price auctions")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate an instance document")
    families = gen.add_subparsers(dest="family", required=True)
    identity = families.add_parser("identity", parents=[common], help="identity-matrix instance")
    identity.add_argument("--size", type=int, required=True)
    identity.add_argument("--value", type=_rational, default=Fraction(1))
    identity.add_argument("--wiring", choices=("pairs", "expert"), default=None)
    identity.add_argument("-o", "--output")
    dspn = families.add_parser("dspn", parents=[common], help="DSP_n family")
    dspn.add_argument("--n", type=int, required=True)
    dspn.add_argument("--eps", type=_rational, default=None)
    dspn.add_argument("-o", "--output")
    mis = families.add_parser("mis", parents=[common], help="independent-set reduction")
    mis.add_argument("--graph", required=True)
    mis.add_argument("--ell", type=int, default=None)
    mis.add_argument("-o", "--output")
    seeded = families.add_parser("random", parents=[common], help="seeded random instance")
    seeded.add_argument("--n", type=int, required=True)
    seeded.add_argument("--k", type=int, required=True)
    seeded.add_argument("--m", type=int, required=True)
    seeded.add_argument("--seed", type=int, default=0)
    seeded.add_argument("--local-experts", action="store_true")
    seeded.add_argument("-o", "--output")

    revenue = commands.add_parser("revenue", parents=[common], help="revenue of a profile")
    revenue.add_argument("-i", "--instance", required=True)
    revenue.add_argument("-p", "--profile", required=True)

    solve = commands.add_parser("solve", parents=[common], help="solve the revenue problem")
    solve.add_argument("--method", choices=METHODS, default="exact")
    solve.add_argument("-i", "--instance", required=True)

    shapley = commands.add_parser("shapley", parents=[common], help="Shapley payments of a profile")
    shapley.add_argument("-i", "--instance", required=True)
    shapley.add_argument("-p", "--profile", required=True)
    shapley.add_argument("--method", choices=sorted(PAYMENT_RULES), default="subset")

    brd = commands.add_parser("brd", parents=[common], help="best-response dynamics")
    brd.add_argument("-i", "--instance", required=True)
    brd.add_argument("--start", default="silent",
                     help="silent, all-report or a profile JSON file")
    brd.add_argument("--order", type=_order, default=None, help="player order, e.g. 1,0")
    brd.add_argument("--trace", default=None, help="write the improving steps to this CSV file")

    equilibria = commands.add_parser("equilibria", parents=[common], help="pure Nash equilibria")
    equilibria.add_argument("-i", "--instance", required=True)
    equilibria.add_argument("--poa", action="store_true", help="report the price of anarchy")
    equilibria.add_argument("--pos", action="store_true", help="report the price of stability")

    pipeline = commands.add_parser("mis-pipeline", parents=[common],
                                   help="independent set through the DSP reduction")
    pipeline.add_argument("--graph", required=True)
    pipeline.add_argument("--ell", type=int, default=None)
    pipeline.add_argument("--solver", choices=("exact",), default="exact")
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    return Limits.from_env(max_profiles=args.max_profiles, max_parts=args.max_parts,
                           n_jobs=args.threads if args.threads is not None else -1,
                           show_progress=args.progress or None)


def _write_instance(instance: DSPInstance, args: argparse.Namespace) -> Report:
    report = Report(command="gen", method=args.family, deterministic=args.deterministic,
                    extra={'name': instance.name, 'n': instance.n, 'k': instance.k,
                           'm': instance.m})
    if args.output:
        save_instance(instance, args.output)
        report.extra['output'] = args.output
    else:
        report.extra['instance'] = instance_to_document(instance)
    return report


def _cmd_gen(args: argparse.Namespace) -> Report:
    if args.family == "identity":
        instance = gen_identity(args.size, args.value, wiring=args.wiring)
    elif args.family == "dspn":
        instance = gen_dspn(args.n, args.eps)
    elif args.family == "mis":
        instance, _ = gen_mis_reduction(load_graph(args.graph), args.ell)
    else:
        instance = gen_random(args.n, args.k, args.m, args.seed, local_experts=args.local_experts)
    return _write_instance(instance, args)


def _cmd_revenue(args: argparse.Namespace) -> Report:
    instance = load_instance(args.instance)
    profile = load_profile(args.profile, instance)
    solution = Solution.from_profile(instance, profile, "profile")
    breakdown = [{'part': list(part), 'contribution': value}
                 for part, value in instance.revenue_breakdown(solution.joint)]
    return Report(command="revenue", revenue=solution.revenue, profile=profile,
                  joint=solution.joint, extra={'breakdown': breakdown},
                  deterministic=args.deterministic)


def _cmd_solve(args: argparse.Namespace) -> Report:
    instance = load_instance(args.instance)
    solver = DSPSolver(instance, _limits(args))
    solution = solver.solve(args.method)
    return Report(command="solve", method=solution.method, revenue=solution.revenue,
                  profile=solution.profile, joint=solution.joint, stats=solution.stats,
                  deterministic=args.deterministic)


def _cmd_shapley(args: argparse.Namespace) -> Report:
    limits = _limits(args)
    instance = load_instance(args.instance)
    game = DSPGame(instance, limits)
    indices = game.index_of(load_profile(args.profile, instance))
    payments = PAYMENT_RULES[args.method](game, indices, limits)
    return Report(command="shapley", method=args.method, revenue=game.value(indices),
                  profile=game.to_profile(indices), payments=payments.to_list(),
                  extra={'null_value': game.null_value(),
                         'potential': potential(game, indices, limits)},
                  deterministic=args.deterministic)


def _start_profile(game: DSPGame, start: str) -> tuple:
    if start == "silent":
        return game.silent_profile()
    if start == "all-report":
        return game.full_profile()
    return game.index_of(load_profile(start, game.instance))


def _cmd_brd(args: argparse.Namespace) -> Report:
    limits = _limits(args)
    game = DSPGame(load_instance(args.instance), limits)
    start = _start_profile(game, args.start)
    trace = run_brd(game, start, order=args.order, limits=limits)
    if args.trace:
        trace.to_frame().to_csv(args.trace, index=False)
    return Report(command="brd", revenue=game.value(trace.final),
                  profile=game.to_profile(trace.final),
                  extra={'steps': len(trace.steps), 'converged': trace.converged,
                         'start': list(start), 'final': list(trace.final)},
                  stats={'passes': trace.passes}, deterministic=args.deterministic)


def _cmd_equilibria(args: argparse.Namespace) -> Report:
    limits = _limits(args)
    game = DSPGame(load_instance(args.instance), limits)
    values = value_table(game, limits)
    found = enumerate_equilibria(game, limits, values)
    listed = [{'indices': list(eq.profile),
               'profile': game.to_profile(eq.profile),
               'value': eq.value,
               'payments': eq.payments.to_list()} for eq in found]
    report = Report(command="equilibria", equilibria=listed,
                    extra={'count': len(found), 'profiles': int(values.size)},
                    deterministic=args.deterministic)
    if args.poa or args.pos:
        efficiency = poa_pos(game, limits, found, values)
        report.opt = efficiency.opt
        if args.poa:
            report.poa = efficiency.poa
        if args.pos:
            report.pos = efficiency.pos
    return report


def _cmd_mis_pipeline(args: argparse.Namespace) -> Report:
    limits = _limits(args)
    graph = load_graph(args.graph)
    nodes = run_mis_pipeline(graph, args.ell, solver=partial(solve_exact, limits=limits),
                             limits=limits)
    return Report(command="mis-pipeline", method=args.solver,
                  extra={'independent_set': sorted(nodes), 'size': len(nodes),
                         'nodes': graph.number_of_nodes()},
                  deterministic=args.deterministic)


HANDLERS = {
    "gen": _cmd_gen,
    "revenue": _cmd_revenue,
    "solve": _cmd_solve,
    "shapley": _cmd_shapley,
    "brd": _cmd_brd,
    "equilibria": _cmd_equilibria,
    "mis-pipeline": _cmd_mis_pipeline,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        order = getattr(args, "order", None)
        if order is not None and (not order or sorted(order) != list(range(len(order)))):
            parser.error(f"--order {order} is not a permutation of the players")
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        report = HANDLERS[args.command](args)
    except (DSPError, OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    sys.stdout.write(report.render(args.format))
    return 0
