"""Argument parsing, subcommand handlers and the exit-code contract."""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

from pydantic import BaseModel

from src.cli.render import render
from src.cli.schemas import (
    BoundsOutput,
    DotReport,
    ExitCode,
    RunConfig,
    SolveReport,
    ValidateReport,
)
from src.coalitions.bounds import bounds
from src.coalitions.schemas import Violation
from src.coalitions.service import CoalitionService
from src.coalitions.solver import c_kf
from src.config import settings
from src.domination.schemas import FairReport
from src.domination.service import DominationService
from src.exceptions import SolverInconclusive
from src.graphs.families import FAMILY_BUILDERS
from src.ingestion.service import IngestionService, encode_graph6
from src.verification.corpus import ATLAS_MAX_ORDER, as_corpus, atlas_graphs, corpus_from_file
from src.verification.schemas import ALL_CENSUS_CHECKS, CensusReport
from src.verification.service import VerificationService

logger = logging.getLogger(__name__)

Outcome = tuple[BaseModel, ExitCode]

SCHEMA_MODELS: dict[str, type[BaseModel]] = {
    "solve": SolveReport,
    "validate": ValidateReport,
    "bounds": BoundsOutput,
    "dot": DotReport,
    "fair": FairReport,
    "census": CensusReport,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fair-coalition",
        description="k-fair domination and k-fair coalition partitions of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--family", choices=sorted(FAMILY_BUILDERS), help="named graph family")
    source.add_argument("--n", type=int, help="order parameter of the family")
    source.add_argument("--s", type=int, help="first side of K_{s,t}")
    source.add_argument("--t", type=int, help="second side of K_{s,t}")
    source.add_argument("--l", type=int, help="pendants per vertex in a corona")
    source.add_argument("--g6", help="graph6 string")
    source.add_argument("--edge-list", type=Path, help="edge-list or .g6 file")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--k", type=int, nargs="+", help="fairness parameter(s), default 2")
    run.add_argument("--workers", type=int, default=settings.SOLVER_WORKERS)
    run.add_argument("--budget", type=int, help="node budget for the exact search")
    run.add_argument("--order-cap", type=int, help="largest order the solver accepts")
    run.add_argument("--allow-large", action="store_true", help="confirm an order cap above the configured one")
    run.add_argument("--format", choices=("text", "json", "dot"), default="text")

    partition = argparse.ArgumentParser(add_help=False)
    partition.add_argument("--partition", type=Path, required=True, help="block file, one block per line")

    sub.add_parser("solve", parents=[source, run], help="compute C_kf with a witness partition")
    sub.add_parser("validate", parents=[source, run, partition], help="check a coalition partition")
    sub.add_parser("bounds", parents=[source, run], help="upper and lower bounds on C_kf")
    sub.add_parser("dot", parents=[source, run, partition], help="coalition graph of a partition as DOT")
    sub.add_parser("fair", parents=[source, run], help="γ, γ_kf, γ_f and d_kf")

    verify = sub.add_parser("verify", parents=[run], help="check the closed-form table")
    verify.add_argument("--max-order", type=int, default=settings.VERIFY_MAX_ORDER)
    verify.add_argument("--progress", action="store_true", default=None)

    census = sub.add_parser("census", parents=[run], help="property checks over a graph corpus")
    census.add_argument("corpus", type=Path, nargs="?", help="graph6 file, one graph per line")
    census.add_argument("--atlas", action="store_true", help=f"all graphs of order <= {ATLAS_MAX_ORDER}")
    census.add_argument("--max-order", type=int, help="largest atlas order")
    census.add_argument("--checks", nargs="+", choices=ALL_CENSUS_CHECKS)
    census.add_argument("--regular", type=int, help="keep only r-regular graphs")
    census.add_argument("--progress", action="store_true", default=None)

    extremal = sub.add_parser("extremal", parents=[run], help="graphs attaining C_2f = n or n - 1")
    extremal.add_argument("--max-order", type=int, default=settings.VERIFY_MAX_ORDER)

    schema = sub.add_parser("schema", help="JSON schema of a report")
    schema.add_argument("model", choices=sorted(SCHEMA_MODELS))
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    return RunConfig(**values)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_solve(config: RunConfig) -> Outcome:
    g, k = config.graph(), config.single_k
    try:
        result = c_kf(g, k, budget=config.budget, workers=config.workers, order_cap=config.order_cap)
    except SolverInconclusive as e:
        report = SolveReport(
            graph6=encode_graph6(g), n=g.n, k=k, outcome="inconclusive",
            nodes=e.nodes, best_lower_bound=e.best_lower_bound,
            bounds=bounds(g, k, order_cap=config.order_cap),
        )
        return report, ExitCode.INCONCLUSIVE
    report = SolveReport(
        graph6=encode_graph6(g),
        n=g.n,
        k=k,
        outcome=result.outcome,
        c_kf=result.value,
        witness=result.witness,
        certificate=result.certificate,
        nodes=result.nodes,
        bounds=bounds(g, k, order_cap=config.order_cap),
    )
    return report, ExitCode.OK if result.found else ExitCode.NO_PARTITION


def cmd_validate(config: RunConfig) -> Outcome:
    g, k = config.graph(), config.single_k
    partition = IngestionService().load_partition(config.partition)
    outcome = CoalitionService(g, k).validate(partition)
    if isinstance(outcome, Violation):
        report = ValidateReport(graph6=encode_graph6(g), k=k, partition=partition, valid=False, violation=outcome)
        return report, ExitCode.INVALID_PARTITION
    report = ValidateReport(graph6=encode_graph6(g), k=k, partition=partition, valid=True, certificate=outcome)
    return report, ExitCode.OK


def cmd_bounds(config: RunConfig) -> Outcome:
    g = config.graph()
    if g.n == 0:
        raise ValueError("bounds need a graph with at least one vertex")
    report = BoundsOutput(
        graph6=encode_graph6(g),
        n=g.n,
        min_degree=g.min_degree,
        max_degree=g.max_degree,
        bounds=bounds(g, config.single_k, order_cap=config.order_cap),
    )
    return report, ExitCode.OK


def cmd_dot(config: RunConfig) -> Outcome:
    g, k = config.graph(), config.single_k
    partition = IngestionService().load_partition(config.partition)
    coalitions = CoalitionService(g, k)
    outcome = coalitions.validate(partition)
    if isinstance(outcome, Violation):
        logger.error("not a %d-fair coalition partition: %s", k, outcome.message)
        report = ValidateReport(graph6=encode_graph6(g), k=k, partition=partition, valid=False, violation=outcome)
        return report, ExitCode.INVALID_PARTITION
    kfcg = coalitions.coalition_graph(partition)
    report = DotReport(
        graph6=encode_graph6(g),
        k=k,
        blocks=kfcg.n,
        coalitions=kfcg.edge_count,
        dot=coalitions.coalition_graph_dot(partition),
    )
    return report, ExitCode.OK


def cmd_fair(config: RunConfig) -> Outcome:
    service = DominationService(config.order_cap)
    return service.fair_report(config.graph(), config.single_k), ExitCode.OK


def _suite_exit(report: CensusReport) -> ExitCode:
    return ExitCode.OK if report.passed else ExitCode.FAILED


def _verification(config: RunConfig) -> VerificationService:
    return VerificationService(
        budget=config.budget,
        order_cap=config.order_cap,
        workers=config.workers,
        progress=config.progress,
    )


def cmd_verify(config: RunConfig) -> Outcome:
    report = _verification(config).run_theorem_suite(max_order=config.max_order)
    return report, _suite_exit(report)


def cmd_census(config: RunConfig) -> Outcome:
    if config.atlas:
        top = config.max_order or ATLAS_MAX_ORDER
        corpus = as_corpus(atlas_graphs(1, top))
        source = f"graph atlas, orders 1..{top}"
    else:
        corpus = corpus_from_file(config.corpus)
        source = str(config.corpus)
    report = _verification(config).run_census(
        corpus,
        k_values=config.k,
        checks=config.checks,
        source=source,
        regular=config.regular,
    )
    return report, _suite_exit(report)


def cmd_extremal(config: RunConfig) -> Outcome:
    report = _verification(config).run_extremal_scan(max_order=config.max_order)
    return report, _suite_exit(report)


COMMANDS: dict[str, Callable[[RunConfig], Outcome]] = {
    "solve": cmd_solve,
    "validate": cmd_validate,
    "bounds": cmd_bounds,
    "dot": cmd_dot,
    "fair": cmd_fair,
    "verify": cmd_verify,
    "census": cmd_census,
    "extremal": cmd_extremal,
}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Execute one command line and return its exit code; reports go to ``stdout``, logs to stderr."""
    stdout = stdout or sys.stdout
    try:
        config = parse_config(argv)
        if config.command == "schema":
            schema = SCHEMA_MODELS[config.model].model_json_schema(mode="serialization")
            stdout.write(json.dumps(schema, indent=2) + "\n")
            return ExitCode.OK
        started = time.perf_counter()
        report, code = COMMANDS[config.command](config)
        elapsed = time.perf_counter() - started
        logger.info("%s finished in %.3fs with exit code %d", config.command, elapsed, code)
        stdout.write(render(report, config.format, elapsed=elapsed))
        return code
    except (ValueError, OSError) as e:
        # GraphParseError, PartitionStructureError, OrderCapExceeded and pydantic's
        # ValidationError are all ValueErrors
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.INPUT
