"""
Runner CLI argument parser construction.

This module owns the argument-parser definition for the `check`, `corpus`
and `patterns` commands so execution code in `condlint.runner.runtime`
remains focused on behavior rather than CLI schema setup.
"""

from __future__ import annotations

import argparse
from typing import Optional, Sequence

from condlint import __version__
from condlint.common.config import VALID_FORMATS, VALID_PREVALENCE_BASES

__all__ = [
    "arguments_parse",
    "parser_create",
    "coreArgs_populate",
    "logLevelArgs_populate",
    "checkArgs_populate",
    "corpusArgs_populate",
    "patternsArgs_populate",
    "logLevelOverride_get",
    "argsWithLogLevel_apply",
]


def arguments_parse(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        argv: Argument list without the program name; None reads sys.argv.

    Returns:
        Parsed argparse namespace with `command` set.
    """
    parser: argparse.ArgumentParser = parser_create()
    return parser.parse_args(argv)


def parser_create() -> argparse.ArgumentParser:
    """
    Create fully populated argument parser.

    Returns:
        Configured argument parser with one subparser per command.
    """
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="condlint",
        description="condlint - detect conditional anti-patterns in Python code",
    )
    parser.add_argument("--version", action="version", version=f"condlint {__version__}")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    check_parser = commands.add_parser("check", help="Check files and report anti-patterns")
    coreArgs_populate(check_parser)
    logLevelArgs_populate(check_parser)
    checkArgs_populate(check_parser)

    corpus_parser = commands.add_parser(
        "corpus", help="Analyse a corpus of submissions and emit prevalence reports"
    )
    coreArgs_populate(corpus_parser)
    logLevelArgs_populate(corpus_parser)
    corpusArgs_populate(corpus_parser)

    patterns_parser = commands.add_parser("patterns", help="List the anti-pattern catalogue")
    coreArgs_populate(patterns_parser)
    logLevelArgs_populate(patterns_parser)
    patternsArgs_populate(patterns_parser)
    return parser


def coreArgs_populate(parser: argparse.ArgumentParser) -> None:
    """
    Populate arguments shared by every command.

    Args:
        parser: Target argument parser.
    """
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to config file (default: search standard locations)",
    )
    parser.add_argument(
        "--format",
        type=str,
        choices=list(VALID_FORMATS),
        default=None,
        help="Report format (default: text on a terminal, json otherwise)",
    )


def logLevelArgs_populate(parser: argparse.ArgumentParser) -> None:
    """
    Populate log level override flags.

    Args:
        parser: Target argument parser.
    """
    parser.add_argument(
        "--debug", action="store_true", help="Enable debug logging (overrides config)"
    )
    parser.add_argument(
        "--info", action="store_true", help="Enable info logging (overrides config)"
    )
    parser.add_argument(
        "--warning", action="store_true", help="Enable warning logging (overrides config)"
    )
    parser.add_argument(
        "--error", action="store_true", help="Enable error logging (overrides config)"
    )
    parser.add_argument(
        "--critical", action="store_true", help="Enable critical logging (overrides config)"
    )


def _selectionArgs_add(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--patterns",
        type=str,
        default=None,
        metavar="LIST",
        help="Comma separated pattern identifiers to report (default: all)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (overrides config)",
    )


def checkArgs_populate(parser: argparse.ArgumentParser) -> None:
    """
    Populate `check` arguments.

    Args:
        parser: Target argument parser.
    """
    parser.add_argument(
        "paths",
        nargs="+",
        metavar="PATH",
        help="Files or directories to check; '-' reads standard input",
    )
    _selectionArgs_add(parser)
    parser.add_argument(
        "--suggestions",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Attach rewrite suggestions (default: on)",
    )
    parser.add_argument(
        "--skip-invalid",
        action=argparse.BooleanOptionalAction,
        default=None,
        dest="skip_invalid",
        help="Do not fail on files that do not parse (default: off)",
    )


def corpusArgs_populate(parser: argparse.ArgumentParser) -> None:
    """
    Populate `corpus` arguments.

    Args:
        parser: Target argument parser.
    """
    parser.add_argument("root", metavar="ROOT", help="Corpus root directory")
    parser.add_argument(
        "--layout",
        type=str,
        default=None,
        help="Submission layout relative to ROOT (default: {group}/{student}/*.py)",
    )
    _selectionArgs_add(parser)
    parser.add_argument(
        "--skip-invalid",
        action=argparse.BooleanOptionalAction,
        default=None,
        dest="skip_invalid",
        help="Leave unparseable submissions out of the exit code (default: on)",
    )
    parser.add_argument(
        "--prevalence-basis",
        type=str,
        choices=list(VALID_PREVALENCE_BASES),
        default=None,
        dest="prevalence_basis",
        help="Count occurrences or submissions for prevalence (default: occurrence)",
    )
    parser.add_argument(
        "--out",
        type=str,
        default=None,
        metavar="DIR",
        help="Write report files into DIR instead of standard output",
    )


def patternsArgs_populate(parser: argparse.ArgumentParser) -> None:
    """
    Populate `patterns` arguments.

    Args:
        parser: Target argument parser.
    """
    parser.add_argument(
        "identifiers",
        nargs="*",
        metavar="ID",
        help="Describe only these patterns (default: the whole catalogue)",
    )


def logLevelOverride_get(args: argparse.Namespace) -> str | None:
    """
    Resolve explicit log level override flags.

    Args:
        args: Parsed CLI args.

    Returns:
        Selected log level or None.
    """
    if getattr(args, "critical", False):
        return "CRITICAL"
    if getattr(args, "error", False):
        return "ERROR"
    if getattr(args, "warning", False):
        return "WARNING"
    if getattr(args, "info", False):
        return "INFO"
    if getattr(args, "debug", False):
        return "DEBUG"
    return None


def argsWithLogLevel_apply(args: argparse.Namespace, log_level: str | None) -> None:
    """
    Apply optional log level override to args.

    Args:
        args: Parsed CLI args.
        log_level: Optional log level string.
    """
    if log_level is not None:
        setattr(args, "log_level", log_level)
