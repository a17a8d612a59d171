"""oracle: brute-force verdicts, single queries or whole scans."""

import argparse
import logging

from loop_graphic.cli import EXIT_DISAGREEMENT, EXIT_FAILED, EXIT_OK
from loop_graphic.cli.commands import add_sequence_arguments
from loop_graphic.cli.files import dump_document, load_sequence
from loop_graphic.config import Settings
from loop_graphic.errors import InputFormatError
from loop_graphic.graphs import bipartite_to_document, graph_to_document
from loop_graphic.oracle import (
    FixtureStore,
    OracleBudget,
    exhaustive_sequence_scan,
    oracle_bipartite_symmetric,
    oracle_realizable,
)
from loop_graphic.sequences import (
    Convention,
    DegreeSequence,
    all_sequences,
    check_for,
    check_gale_ryser_symmetric,
)

logger = logging.getLogger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser(
        "oracle", help="decide realizability by exhaustive enumeration"
    )
    add_sequence_arguments(parser)
    parser.add_argument(
        "--convention",
        choices=[c.value for c in Convention],
        default=Convention.REDUCED.value,
        help="degree convention for graphs-with-loops (default: reduced)",
    )
    parser.add_argument(
        "--bipartite",
        action="store_true",
        help="ask the symmetric bipartite oracle instead (is (d, d) realizable?)",
    )
    parser.add_argument(
        "--compare",
        action="store_true",
        help="also run the matching inequality check; exit 4 on any disagreement",
    )
    scan = parser.add_argument_group("scan")
    scan.add_argument(
        "--scan", action="store_true", help="scan every sequence of length --n"
    )
    scan.add_argument("--n", type=int, default=None, help="sequence length to scan")
    scan.add_argument("--dmax", type=int, default=None, help="largest entry to scan")
    scan.add_argument(
        "--jobs", type=int, default=None, help="joblib workers (default from settings)"
    )
    budget = parser.add_argument_group("budget")
    budget.add_argument("--max-n", type=int, default=None, help="vertex-count cap")
    budget.add_argument(
        "--timeout", type=float, default=None, help="seconds allowed per query"
    )
    parser.add_argument(
        "--save",
        action="store_true",
        help="append the verdict to the fixture log (LOOP_GRAPHIC_FIXTURES_PATH)",
    )
    parser.set_defaults(handler=run)


def _budget(args: argparse.Namespace, settings: Settings) -> OracleBudget:
    base = OracleBudget.from_settings(settings)
    updates: dict[str, int | float] = {}
    if args.max_n is not None:
        updates["max_n"] = args.max_n
        updates["bipartite_max_n"] = args.max_n
    if args.timeout is not None:
        updates["timeout"] = args.timeout
    return OracleBudget.model_validate({**base.model_dump(), **updates})


def _check_verdict(d: DegreeSequence, args: argparse.Namespace) -> bool:
    if args.bipartite:
        return check_gale_ryser_symmetric(d).passed
    return check_for(Convention(args.convention))(d).passed


def _run_scan(
    args: argparse.Namespace, settings: Settings, budget: OracleBudget
) -> int:
    if args.n is None or args.dmax is None:
        raise InputFormatError("--scan needs --n and --dmax")
    if args.n < 0 or args.dmax < 0:
        raise InputFormatError(
            f"--n and --dmax must be nonnegative, got {args.n} and {args.dmax}"
        )
    if args.jobs == 0:
        raise InputFormatError("--jobs must be nonzero (1 sequential, -1 all cores)")
    if args.bipartite:
        verdicts = [
            (d, oracle_bipartite_symmetric(d, budget).realizable)
            for d in all_sequences(args.n, args.dmax)
        ]
    else:
        verdicts = exhaustive_sequence_scan(
            args.n, args.dmax, Convention(args.convention), budget, workers=args.jobs
        )
    realizable = sum(1 for _, ok in verdicts if ok)
    print(f"{len(verdicts)} sequences, {realizable} realizable")
    if not args.compare:
        return EXIT_OK
    disagreements = [d for d, ok in verdicts if _check_verdict(d, args) != ok]
    for d in disagreements:
        logger.warning("Oracle and check disagree on %s", d)
        print(f"disagreement: {d}")
    print(f"{len(disagreements)} disagreements")
    return EXIT_DISAGREEMENT if disagreements else EXIT_OK


def run(args: argparse.Namespace, settings: Settings) -> int:
    """Exit 0 if realizable, 1 if not, 3 on budget, 4 on a --compare mismatch."""
    budget = _budget(args, settings)
    if args.scan:
        return _run_scan(args, settings, budget)

    d = load_sequence(args.sequence, args.file, autosort=args.sort)
    if args.bipartite:
        bipartite = oracle_bipartite_symmetric(d, budget)
        realizable = bipartite.realizable
        witness = (
            bipartite_to_document(bipartite.witness) if bipartite.witness else None
        )
    else:
        result = oracle_realizable(d, Convention(args.convention), budget)
        realizable = result.realizable
        witness = graph_to_document(result.witness) if result.witness else None
        if args.save:
            FixtureStore(settings.fixtures_path).append(result)

    print("realizable" if realizable else "not realizable")
    if witness is not None:
        print(dump_document(witness))
    if args.compare:
        expected = _check_verdict(d, args)
        if expected != realizable:
            logger.warning("Oracle and check disagree on %s", d)
            print(f"disagreement: check says {'passed' if expected else 'failed'}")
            return EXIT_DISAGREEMENT
        print("0 disagreements")
    return EXIT_OK if realizable else EXIT_FAILED
