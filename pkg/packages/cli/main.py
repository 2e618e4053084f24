"""Command-line entry point: ``decomp count|table|verify|graph|refine|decompose``."""

import argparse
import sys
from collections.abc import Sequence
from math import gcd

import structlog

from packages.cli.render import render_chain, render_table, to_json
from packages.collisions.qcount import count_collisions, count_decomposables, is_composite
from packages.collisions.refine import normalize, refine_pair
from packages.collisions.relgraph import build_graph, scc_chain, to_dot
from packages.core.errors import DecompositionError
from packages.core.models.factorization import OrderedFactorization
from packages.core.models.records import GraphReport, OutputRecord, VerifyReport
from packages.core.utils.config import get_settings
from packages.core.utils.log_config import configure_logging
from packages.ffpoly.decompose import all_tame_decompositions, classify_two_collision
from packages.ffpoly.field import FqPoly, PrimeField
from packages.oracle.enumeration import exhaustive_decomposables, oracle_count_union

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class UsageError(DecompositionError):
    """A command-line precondition failed."""


def cmd_count(args: argparse.Namespace) -> int:
    _require_format(args, ("text", "json"))
    _require_degree(args.n)
    count = count_decomposables(args.n)
    at = None
    if args.eval is not None:
        if args.eval < 2 or gcd(args.eval, args.n) != 1:
            raise UsageError(
                f"tame case requires characteristic coprime to n (q={args.eval}, n={args.n})"
            )
        at = [args.eval]
    record = OutputRecord.from_count(args.n, count, at)
    if args.format == "json":
        print(to_json(record), end="")
    else:
        print(record.polynomial)
        if at:
            print(count.eval(args.eval))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    settings = get_settings()
    low = settings.table_min if args.min is None else args.min
    high = settings.table_max if args.max is None else args.max
    if not 1 <= low <= high:
        raise UsageError(f"need 1 <= min <= max, got min={low}, max={high}")
    records = [
        OutputRecord.from_count(n, count_decomposables(n))
        for n in range(low, high + 1) if is_composite(n)
    ]
    logger.info("Table computed", rows=len(records), min=low, max=high)
    print(render_table(records, args.format), end="")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    _require_format(args, ("text", "json"))
    _require_degree(args.n)
    count = count_decomposables(args.n)
    symbolic = str(count.eval(args.q))
    oracles: dict[str, str] = {}
    if args.oracle in ("compositions", "both"):
        oracles["compositions"] = str(oracle_count_union(args.n, args.q, budget=args.budget))
    if args.oracle in ("exhaustive", "both"):
        oracles["exhaustive"] = str(exhaustive_decomposables(args.n, args.q, budget=args.budget))
    report = VerifyReport(
        n=args.n, q=args.q, polynomial=str(count), symbolic=symbolic, oracles=oracles
    )
    if args.format == "json":
        print(to_json(report), end="")
    else:
        observed = " ".join(f"{name}={value}" for name, value in report.oracles.items())
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{verdict} n={args.n} q={args.q} symbolic={symbolic} {observed}")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_graph(args: argparse.Namespace) -> int:
    _require_format(args, ("text", "json"))
    sequences = []
    for i, text in enumerate(args.D.split(";"), start=1):
        try:
            sequences.append(OrderedFactorization.parse(text, args.n))
        except DecompositionError as exc:
            raise UsageError(f"sequence {i}: {exc}") from exc
    normalized = normalize(sequences)
    graph = build_graph(normalized)
    if args.dot:
        print(to_dot(graph), end="")
        return EXIT_OK
    chain = scc_chain(graph)
    count = count_collisions(args.n, sequences)
    if args.format == "json":
        report = GraphReport(
            n=args.n,
            members=[str(m) for m in normalized.members],
            components=[[str(v) for v in c.vertices] for c in chain],
            polynomial=str(count),
        )
        print(to_json(report), end="")
    else:
        for member in normalized.members:
            print(member)
        print(render_chain(chain))
        print(count)
    return EXIT_OK


def cmd_refine(args: argparse.Namespace) -> int:
    _require_format(args, ("text",))
    try:
        d = OrderedFactorization.parse(args.d)
        e = OrderedFactorization.parse(args.e)
    except DecompositionError as exc:
        raise UsageError(str(exc)) from exc
    left, right = refine_pair(d, e)
    print(left)
    print(right)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    _require_format(args, ("text",))
    field = PrimeField(args.prime or get_settings().default_prime)
    try:
        f = FqPoly.parse(args.f, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not f.is_monic_original():
        raise UsageError(f"{f} is not monic original over {field}")
    if field.divides(f.degree):
        raise UsageError(f"tame case requires characteristic coprime to n (n={f.degree})")
    for g, h in all_tame_decompositions(f):
        print(f"({g}) ∘ ({h})")
    n = f.degree
    for d in range(3, n):
        e = n // d
        if n % d == 0 and d > e >= 2 and gcd(d, e) == 1:
            print(f"{d}x{e}: {classify_two_collision(f, d, e) or 'no collision'}")
    return EXIT_OK


def _require_format(args: argparse.Namespace, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} supports --format {'|'.join(allowed)}")


def _require_degree(n: int) -> None:
    if n < 1:
        raise UsageError(f"n must be at least 1, got {n}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "csv", "json"], default="text", help="Output format"
    )
    common.add_argument("--budget", type=int, help="Oracle enumeration budget")
    common.add_argument("--prime", type=int, help="Field for finite-field commands")

    parser = argparse.ArgumentParser(
        prog="decomp",
        description="Count decomposable monic original polynomials over finite fields",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="Symbolic count for degree n")
    count.add_argument("n", type=int)
    count.add_argument("--eval", type=int, metavar="Q", help="Also evaluate at q")
    count.set_defaults(handler=cmd_count)

    table = commands.add_parser("table", parents=[common], help="Counts for composite n")
    table.add_argument("--min", type=int)
    table.add_argument("--max", type=int)
    table.set_defaults(handler=cmd_table)

    verify = commands.add_parser("verify", parents=[common], help="Compare against oracles")
    verify.add_argument("n", type=int)
    verify.add_argument("q", type=int)
    verify.add_argument(
        "--oracle", choices=["exhaustive", "compositions", "both"], default="compositions"
    )
    verify.set_defaults(handler=cmd_verify)

    graph = commands.add_parser("graph", parents=[common], help="Relation graph of sequences")
    graph.add_argument("n", type=int)
    graph.add_argument("-D", required=True, help='Sequences, e.g. "12,420;14,360"')
    graph.add_argument("--dot", action="store_true", help="Emit DOT")
    graph.set_defaults(handler=cmd_graph)

    refine = commands.add_parser("refine", parents=[common], help="Refine two sequences")
    refine.add_argument("d")
    refine.add_argument("e")
    refine.set_defaults(handler=cmd_refine)

    decompose = commands.add_parser(
        "decompose", parents=[common], help="Tame decompositions of a polynomial"
    )
    decompose.add_argument("f", help='Polynomial, e.g. "x^4+x^2"')
    decompose.set_defaults(handler=cmd_decompose)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point. Returns the process exit code."""
    configure_logging(get_settings())
    args = build_parser().parse_args(argv)
    try:
        return int(args.handler(args))
    except DecompositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
