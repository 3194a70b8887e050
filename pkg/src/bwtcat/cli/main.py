"""The ``bwtcat`` command line.

Exit codes: 0 on success, 1 when a computation fails or a verification check does not
pass, 2 on usage errors and out-of-range parameters.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from pydantic import ValidationError

from bwtcat import __version__
from bwtcat.cli import formatting
from bwtcat.config import RuntimeConfig
from bwtcat.core.symbols import require_dollar_free
from bwtcat.core.transform import bwt, bwt_dollar
from bwtcat.enums.alphabet_policy import AlphabetPolicy
from bwtcat.enums.check_id import CheckId
from bwtcat.enums.edit_kind import EditKind
from bwtcat.enums.family_name import FamilyName
from bwtcat.enums.output_format import OutputFormat
from bwtcat.errors import BwtError, ParameterError
from bwtcat.families import DirectiveSequence, FamilyFactory
from bwtcat.sensitivity.edit_op import EditOp
from bwtcat.sensitivity.effects import apply_edit, edit_effect, measure
from bwtcat.sensitivity.scan import scan_edits
from bwtcat.verify import expected_table2, run_check, table2, verify_all
from bwtcat.verify.report import VerifyReport, VerifySummary

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

Handler = Callable[[argparse.Namespace, RuntimeConfig], int]


def emit(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def output_format(args: argparse.Namespace, default: OutputFormat) -> OutputFormat:
    return default if args.format is None else OutputFormat(args.format)


def read_word(args: argparse.Namespace) -> bytes:
    """Exact bytes of the positional WORD or of ``--input FILE``.

    Raises:
        ParameterError: Unless exactly one word source is given.
    """
    if (args.word is None) == (args.input is None):
        raise ParameterError("give exactly one word source: WORD or --input FILE")
    if args.input is not None:
        data = Path(args.input).read_bytes()
        return data.rstrip(b"\r\n") if args.trim else data
    return os.fsencode(args.word)


def parse_k_range(value: str) -> range:
    """``A-B`` as the inclusive range A..B; a single integer is a one-element range."""
    try:
        if "-" in value:
            lo, hi = (int(part) for part in value.split("-", 1))
        else:
            lo = hi = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Provided value is not a valid k range: {value}")
    return range(lo, hi + 1)


def cmd_transform(args: argparse.Namespace, config: RuntimeConfig) -> int:
    word = read_word(args)
    transform = (bwt_dollar if args.dollar else bwt)(word, config.builder)
    match output_format(args, OutputFormat.TEXT):
        case OutputFormat.JSON:
            emit(formatting.json_bytes(formatting.TransformView.of(transform)))
        case OutputFormat.TSV:
            emit(formatting.transform_tsv(transform))
        case _:
            emit(formatting.transform_text(transform))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, config: RuntimeConfig) -> int:
    generator = FamilyFactory.create(FamilyName(args.family))
    directive = None if args.directive is None else DirectiveSequence(d=args.directive)
    word = generator.generate(generator.params_from_args(args.params, directive))
    view = formatting.WordStatsView(word=formatting.text(word))
    if args.stats:
        value_r, value_dollar = measure(word, config.builder)
        view = formatting.WordStatsView(
            word=view.word, length=len(word), r=value_r, r_dollar=value_dollar
        )
    if output_format(args, OutputFormat.TEXT) is OutputFormat.JSON:
        emit(formatting.json_bytes(view))
    else:
        emit(formatting.stats_text(view, word))
    return EXIT_OK


def cmd_edit(args: argparse.Namespace, config: RuntimeConfig) -> int:
    word = read_word(args)
    sym = None
    if args.char is not None:
        char = os.fsencode(args.char)
        if len(char) != 1:
            raise ParameterError(f"Provided value is not a valid symbol: {args.char!r}")
        sym = char[0]
    op = EditOp(kind=EditKind(args.op), pos=args.pos, sym=sym)
    effect = edit_effect(word, op, config.builder)
    edited = apply_edit(word, op)
    view = formatting.EditView(word=formatting.text(edited), **effect.model_dump())
    if output_format(args, OutputFormat.TEXT) is OutputFormat.JSON:
        emit(formatting.json_bytes(view))
    else:
        emit(formatting.edit_text(view, edited))
    return EXIT_OK


def cmd_scan(args: argparse.Namespace, config: RuntimeConfig) -> int:
    word = read_word(args)
    if args.dollar:
        require_dollar_free(word)
    report = scan_edits(
        word,
        alphabet_policy=AlphabetPolicy(args.alphabet),
        parallel=args.parallel,
        workers=config.workers,
        builder=config.builder,
    )
    match output_format(args, OutputFormat.JSON):
        case OutputFormat.TEXT:
            emit(formatting.scan_text(report))
        case OutputFormat.TSV:
            emit(formatting.scan_tsv(report))
        case _:
            emit(formatting.json_bytes(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RuntimeConfig) -> int:
    if args.k is None and args.k_range is None:
        raise ParameterError("verify needs --k or --k-range")
    k_values = range(args.k, args.k + 1) if args.k_range is None else args.k_range
    if args.check is None:
        summary = verify_all(k_values, config, parallel=args.parallel)
    else:
        reports: List[VerifyReport] = []
        for k in k_values:
            reports.extend(run_check(args.check, k, i=args.i, config=config))
        summary = VerifySummary(reports=tuple(reports))
    match output_format(args, OutputFormat.TEXT):
        case OutputFormat.JSON:
            emit(formatting.json_bytes(summary))
        case OutputFormat.TSV:
            emit(formatting.verify_tsv(summary.reports))
        case _:
            emit(formatting.verify_text(summary))
    return EXIT_OK if summary.all_passed else EXIT_FAILURE


def cmd_report(args: argparse.Namespace, config: RuntimeConfig) -> int:
    table = expected_table2(args.k) if args.expected else table2(args.k, config)
    if output_format(args, OutputFormat.TSV) is OutputFormat.JSON:
        emit(formatting.json_bytes(table))
    else:
        emit(table.to_tsv().encode("latin-1"))
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], help="Output format"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def _word_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("word", nargs="?", help="Word as raw bytes")
    parser.add_argument("--input", metavar="FILE", help="Read the word from FILE")
    parser.add_argument(
        "--trim", action="store_true", help="Strip trailing newlines from --input data"
    )


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="bwtcat", description="Burrows-Wheeler transforms and their edit sensitivity"
    )
    parser.add_argument("--version", action="version", version=f"bwtcat {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    transform = commands.add_parser("transform", parents=[common], help="BWT of a word")
    _word_source(transform)
    transform.add_argument("--dollar", action="store_true", help="Transform w$")
    transform.set_defaults(handler=cmd_transform)

    generate = commands.add_parser("generate", parents=[common], help="Generate a family word")
    generate.add_argument("family", choices=[f.value for f in FamilyName])
    generate.add_argument("params", nargs="*", type=int, help="Family parameters")
    generate.add_argument("--directive", help="Directive sequence such as 2,1,1")
    generate.add_argument("--stats", action="store_true", help="Also print length, r, r_$")
    generate.set_defaults(handler=cmd_generate)

    edit = commands.add_parser("edit", parents=[common], help="Apply one edit")
    _word_source(edit)
    edit.add_argument("--op", required=True, choices=[k.value for k in EditKind])
    edit.add_argument("--pos", required=True, type=int)
    edit.add_argument("--char", help="Symbol to insert or substitute")
    edit.set_defaults(handler=cmd_edit)

    scan = commands.add_parser("scan", parents=[common], help="Scan every single edit")
    _word_source(scan)
    scan.add_argument(
        "--alphabet",
        choices=[p.value for p in AlphabetPolicy],
        default=AlphabetPolicy.WORD_ALPHABET.value,
    )
    scan.add_argument("--dollar", action="store_true", help="Require r_$ to be defined")
    scan.add_argument("--parallel", action="store_true", help="Evaluate edits on threads")
    scan.set_defaults(handler=cmd_scan)

    verify = commands.add_parser("verify", parents=[common], help="Run closed-form checks")
    verify.add_argument("--check", choices=[c.value for c in CheckId])
    verify.add_argument("--k", type=int)
    verify.add_argument("--k-range", type=parse_k_range, metavar="A-B")
    verify.add_argument("--i", type=int, help="t-family index for --check tfam")
    verify.add_argument("--parallel", action="store_true", help="Run checks on threads")
    verify.set_defaults(handler=cmd_verify)

    report = commands.add_parser("report", parents=[common], help="Reproduce a table")
    report.add_argument("table", choices=["table2"])
    report.add_argument("--k", type=int, required=True)
    report.add_argument(
        "--expected", action="store_true", help="Closed-form table instead of the computed one"
    )
    report.set_defaults(handler=cmd_report)
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(message)s",
    )


def _exit_code(exc: SystemExit) -> int:
    return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return _exit_code(e)
    configure_logging(args.verbose)
    handler: Handler = args.handler
    try:
        config = RuntimeConfig.from_env()
        return handler(args, config)
    except (ParameterError, ValidationError) as e:
        logging.error(f"bwtcat {args.command}: {e}")
        return EXIT_USAGE
    except BwtError as e:
        logging.error(f"bwtcat {args.command}: {e}")
        return EXIT_FAILURE
    except OSError as e:
        logging.error(f"bwtcat {args.command}: {e}")
        return EXIT_USAGE
