import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional, Sequence

from pydantic import BaseModel

from src.algebra_types import Ambient, RealizeCommandReport
from src.arrangement import milnor_data, realize
from src.classify import classify_bb, classify_raag
from src.cohomology import bb_ring, raag_ring
from src.constants import TIETZE_BUDGET
from src.exceptions import (
    ArrangementException,
    CommandLineException,
    EmptyGraphException,
    GraphParseException,
    LargeGraphException,
    PreconditionException,
)
from src.graph import Graph
from src.parsing import parse_graph
from src.presentation import dicks_leary, raag_presentation
from src.reporting import (
    analyze,
    presentation_report,
    realization_report,
    render_text,
    resonance_report,
    ring_report,
    simplified_report,
    to_json,
)
from src.resonance import bb_resonance, raag_resonance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_REFUSED = 2

VERBS = ("analyze", "classify", "resonance", "present", "cohomology", "realize")


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise CommandLineException(message)


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def build_parser() -> ArgumentParser:

    parser = ArgumentParser(
        prog="bb-invariants",
        description="Invariants of right-angled Artin groups and their Bestvina-Brady kernels.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb in VERBS:
        command = verbs.add_parser(verb)
        command.add_argument("expression", nargs="?", help="graph expression, e.g. Km(2,2,2)")
        command.add_argument("--file", type=Path, help="edge-list document")
        command.add_argument("--format", choices=["json", "text"], default="json")
        command.add_argument("--verbose", action="store_true", help="log decisions to stderr")
        command.add_argument("--tietze-budget", type=non_negative_int, default=TIETZE_BUDGET)
        command.add_argument(
            "--allow-large", action="store_true", help="enumerate resonance beyond 16 vertices"
        )
        if verb in ("classify", "resonance", "present", "cohomology"):
            command.add_argument("--group", choices=["raag", "bb"], default="bb")
        if verb in ("analyze", "classify"):
            command.add_argument("--explain", action="store_true")
        if verb in ("analyze", "realize"):
            command.add_argument("--exponents", help="comma-separated Milnor fiber exponents")
        if verb == "present":
            command.add_argument("--force", action="store_true")
            command.add_argument("--simplify", action="store_true")

    return parser


def read_graph(args: argparse.Namespace) -> Graph:

    if (args.expression is None) == (args.file is None):
        raise CommandLineException("give exactly one graph source: an expression or --file")

    if args.file is not None:
        return parse_graph(text=args.file.read_text())

    return parse_graph(text=args.expression)


def parse_exponents(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        return [int(value) for value in text.split(",")]
    except ValueError:
        raise CommandLineException(f"exponents must be comma-separated integers: {text!r}")


def build_report(args: argparse.Namespace, g: Graph) -> BaseModel:

    budget = args.tietze_budget
    group = Ambient.RAAG if getattr(args, "group", "bb") == "raag" else Ambient.BB

    if args.verb == "analyze":
        return analyze(
            g=g,
            explain=args.explain,
            allow_large=args.allow_large,
            budget=budget,
            exponents=parse_exponents(text=args.exponents),
        )

    if args.verb == "classify":
        if group == Ambient.RAAG:
            return classify_raag(g=g, allow_large=args.allow_large)
        return classify_bb(g=g, explain=args.explain, allow_large=args.allow_large, budget=budget)

    if args.verb == "resonance":
        if group == Ambient.RAAG:
            components = raag_resonance(g=g, allow_large=args.allow_large)
        else:
            components = bb_resonance(g=g, allow_large=args.allow_large, budget=budget)
        return resonance_report(ambient=group, components=components)

    if args.verb == "present":
        if group == Ambient.RAAG:
            p = raag_presentation(g=g)
        else:
            p = dicks_leary(g=g, force=args.force, budget=budget)
        if args.simplify:
            return simplified_report(p=p, group=group, budget=budget)
        return presentation_report(p=p, group=group)

    if args.verb == "cohomology":
        ring = raag_ring(g=g) if group == Ambient.RAAG else bb_ring(g=g, budget=budget)
        return ring_report(r=ring)

    arrangement = realize(g=g)
    exponents = parse_exponents(text=args.exponents)
    milnor = None
    if exponents is not None:
        milnor = milnor_data(a=arrangement, e=exponents)

    return RealizeCommandReport(realization=realization_report(a=arrangement), milnor=milnor)


def run(argv: Sequence[str]) -> int:
    """Run one command, writing the report to stdout; returns the exit status."""

    try:
        args = build_parser().parse_args(argv)
    except CommandLineException as e:
        print(f"bb-invariants: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, force=True
    )

    try:
        g = read_graph(args=args)
        report = build_report(args=args, g=g)
    except (
        CommandLineException,
        GraphParseException,
        EmptyGraphException,
        ArrangementException,
        OSError,
    ) as e:
        logger.warning(f"bad input: {e}")
        return EXIT_BAD_INPUT
    except (PreconditionException, LargeGraphException) as e:
        logger.warning(f"refused: {e}")
        return EXIT_REFUSED

    output = to_json(model=report) if args.format == "json" else render_text(model=report)
    sys.stdout.write(output)

    return EXIT_OK


def main() -> None:
    sys.exit(run(argv=sys.argv[1:]))


if __name__ == "__main__":
    main()
