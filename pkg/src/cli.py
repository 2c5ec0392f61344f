"""
Command-line front end.
Subcommands: gen (sequence tables), verify (one identity), audit (every identity), list (the registry).
Exit codes: 0 all identities hold, 1 at least one failure, 2 usage or domain error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.config import get_audit_config
from src.grid_parser import GridParser
from src.identities import REGISTRY, audit, resolve_identity, verify
from src.kfib import fib_pair_fastdouble
from src.quaternion import qf, ql
from src.response_formatter import OutputFormat, ReportFormatter
from src.ring import ScalarMode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SEQUENCES = ("fib", "lucas", "qf", "ql")


def _workers(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"workers must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    audit_config = get_audit_config()
    formats = [f.value for f in OutputFormat]

    parser = argparse.ArgumentParser(
        prog="python -m src",
        description="Exact arithmetic and identity audit for bicomplex k-Fibonacci quaternions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a table of sequence or quaternion terms")
    gen.add_argument("--seq", choices=SEQUENCES, default="fib")
    gen.add_argument("--k", default="sym", help="'sym' or a positive integer")
    gen.add_argument("--from", dest="start", type=int, default=0)
    gen.add_argument("--to", dest="stop", type=int, default=10)
    gen.add_argument("--format", choices=formats, default=audit_config['default_format'])
    gen.add_argument("--fast", action="store_true",
                     help="use fast doubling (integer k, --seq fib, non-negative indices)")

    ver = sub.add_parser("verify", help="verify one identity over a grid")
    ver.add_argument("--id", dest="identity", required=True,
                     help="identity name, e.g. cassini or sec2-mul")
    ver.add_argument("--k", default="sym")
    for axis in ("n", "m", "r"):
        ver.add_argument(f"--{axis}", default=None, help="range a..b, inclusive")
    ver.add_argument("--format", choices=formats, default=audit_config['default_format'])
    ver.add_argument("--workers", type=_workers, default=audit_config['workers'])

    aud = sub.add_parser("audit", help="verify every registered identity")
    aud.add_argument("--k", default="sym")
    aud.add_argument("--format", choices=formats, default=audit_config['default_format'])
    aud.add_argument("--extended", action="store_true",
                     help="also check the negative-index grids where registered")
    aud.add_argument("--workers", type=_workers, default=audit_config['workers'])

    sub.add_parser("list", help="list registered identities")
    return parser


def _cmd_gen(args, formatter: ReportFormatter, parser: GridParser) -> int:
    ctx = parser.parse_context(args.k)
    indices = parser.parse_range(f"{args.start}..{args.stop}").values()

    if args.fast:
        if ctx.mode is not ScalarMode.INT or args.seq != "fib":
            raise ValueError("--fast requires an integer --k and --seq fib")
        rows = [(n, fib_pair_fastdouble(ctx.k, n)[0]) for n in indices]
    elif args.seq == "fib":
        rows = [(n, ctx.fib(n)) for n in indices]
    elif args.seq == "lucas":
        rows = [(n, ctx.lucas(n)) for n in indices]
    else:
        build = qf if args.seq == "qf" else ql
        rows = [(n, build(ctx, n).value) for n in indices]

    sys.stdout.write(formatter.format_sequence(args.seq, ctx.label, rows, args.format))
    return EXIT_OK


def _cmd_verify(args, formatter: ReportFormatter, parser: GridParser) -> int:
    identity = resolve_identity(args.identity)
    ctx = parser.parse_context(args.k)
    grid = parser.build_grid(identity, ctx, {"n": args.n, "m": args.m, "r": args.r})
    report = verify(identity, ctx, grid, workers=args.workers)
    sys.stdout.write(formatter.format_report(report, args.format))
    return EXIT_OK if report.holds else EXIT_FAILURE


def _cmd_audit(args, formatter: ReportFormatter, parser: GridParser) -> int:
    ctx = parser.parse_context(args.k)
    reports = audit(ctx, extended=args.extended, workers=args.workers)
    sys.stdout.write(formatter.format_audit(reports, ctx.label, args.format))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILURE


def _cmd_list(args, formatter: ReportFormatter, parser: GridParser) -> int:
    sys.stdout.write(formatter.format_registry(REGISTRY.values()))
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "list": _cmd_list,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch the subcommand and return the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logger.info(f"Running {args.command}")
    try:
        return COMMANDS[args.command](args, ReportFormatter(), GridParser())
    except ValueError as e:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
