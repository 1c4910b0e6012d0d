# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Entry point of the suspx executable."""

import argparse
import logging
import sys
import typing

from suspx import defaults
from suspx.cli import commands
from suspx.errors import BudgetExhausted, ParseError, SuspxError, TypeCheckError
from suspx.io import export_expression

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXHAUSTED = 3
EXIT_TYPE_ERROR = 4


def build_parser() -> argparse.ArgumentParser:
    """Build the parser of the command line, with one subparser per command."""
    default_options = defaults.determine_default_options()
    parser = argparse.ArgumentParser(
        prog="suspx", description="Workbench for the suspension calculus and other explicit substitution calculi")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr, repeat for more detail")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_: str) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, help=help_)
        subparser.add_argument("input", help="Expression text, or - to read it from stdin")
        return subparser

    parse = add_command("parse", "Parse an expression and print it back")
    parse.add_argument("--calculus", choices=list(commands.CALCULI), default="susp")

    normalize = add_command("normalize", "Normalize an expression")
    normalize.add_argument("--calculus", choices=[c for c in commands.CALCULI if c != "named"], default="susp")
    normalize.add_argument("--strategy", choices=commands.STRATEGIES, default="full")
    normalize.add_argument(
        "--max-steps", type=int, default=default_options["max_steps"], help="Budget of beta steps")
    normalize.add_argument("--trace", action="store_true", help="Print the derivation as JSON lines")
    normalize.add_argument("--logical-meta", action="store_true", help="Treat meta variables as logical ones")

    translate = add_command("translate", "Translate an expression between calculi")
    translate.add_argument("--from", dest="source", choices=sorted({s for (s, _) in commands.TRANSLATIONS}))
    translate.add_argument("--to", dest="target", choices=sorted({t for (_, t) in commands.TRANSLATIONS}))
    translate.add_argument(
        "--free", default=None, help="Comma separated names of the free variables, the first one standing for #1")

    typecheck = add_command("typecheck", "Infer the type of a term")
    typecheck.add_argument("--calculus", choices=["susp", "db"], default="susp")
    typecheck.add_argument("--sig", dest="sig_path", default=None, help="Signature file")
    typecheck.add_argument("--context", default="", help="Comma separated types of #1, #2, ...")

    add_command("measure", "Print the termination measures of a suspension expression")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s:%(name)s:%(message)s")


def _read_input(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _run(args: argparse.Namespace) -> typing.List[str]:
    text = _read_input(args.input)
    if args.command == "parse":
        return [commands.parse(text, args.calculus)]
    elif args.command == "normalize":
        result, trace = commands.normalize(text, args.calculus, args.strategy, args.max_steps, args.logical_meta)
        if args.trace:
            return [commands.print_trace(trace, args.calculus).rstrip("\n"), result]
        return [result]
    elif args.command == "translate":
        if args.source is None or args.target is None:
            raise SuspxError("Both --from and --to are required")
        free = None if args.free is None else [name.strip() for name in args.free.split(",") if name.strip()]
        return [commands.translate(text, args.source, args.target, free)]
    elif args.command == "typecheck":
        return [commands.typecheck(text, args.calculus, args.sig_path, args.context)]
    else:
        return [commands.measure(text)]


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Run the suspx executable.

    Parameters
    ----------
    argv
        Command line arguments, defaulting to sys.argv[1:].

    Returns
    -------
    :
        Exit status: 0 on success, 2 on parse errors, 3 when the step budget runs out, 4 on type errors
        and 1 on any other failure.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        lines = _run(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except BudgetExhausted as e:
        calculus = getattr(args, "calculus", "susp")
        if getattr(args, "trace", False):
            print(commands.print_trace(e.trace, calculus), end="")
        print(export_expression(e.partial, commands.CALCULI[calculus]))
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET_EXHAUSTED
    except TypeCheckError as e:
        print(f"type error: {e}", file=sys.stderr)
        return EXIT_TYPE_ERROR
    except (SuspxError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    for line in lines:
        if line != "":
            print(line)
    return EXIT_OK
