"""condlint unified command-line interface"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Optional, Sequence

import yaml

from condlint.common.config import Config
from condlint.common.errors import ConfigError, CorpusError, UnknownPatternError
from condlint.common.types import ExitCode
from condlint.runner import runtime
from condlint.runner.bootstrap import configFromArgs_load, loggingWithConfig_setup
from condlint.runner.runner_cli import argsWithLogLevel_apply, arguments_parse, logLevelOverride_get
from condlint.runner.runner_logging import logging_setup

logger = logging.getLogger(__name__)

_Command = Callable[[argparse.Namespace, Config], ExitCode]

COMMANDS: dict[str, _Command] = {
    "check": lambda args, config: runtime.check_run(
        args, config, sys.stdout, sys.stderr, sys.stdin
    ),
    "corpus": lambda args, config: runtime.corpus_run(args, config, sys.stdout),
    "patterns": lambda args, config: runtime.patterns_run(args, config, sys.stdout),
}


def usageError_report(message: str) -> int:
    """
    Print a usage or I/O error

    Args:
        message: Error text.

    Returns:
        USAGE_ERROR exit code.
    """
    print(f"Error: {message}", file=sys.stderr)
    return int(ExitCode.USAGE_ERROR)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the condlint command

    Args:
        argv: Arguments without the program name; None reads sys.argv.

    Returns:
        Process exit code: 0 clean, 1 diagnostics found, 2 usage or I/O
        error, 3 parse errors.
    """
    try:
        args = arguments_parse(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help/--version and 2 on bad usage
        return int(exc.code) if isinstance(exc.code, int) else int(ExitCode.USAGE_ERROR)

    argsWithLogLevel_apply(args, logLevelOverride_get(args))

    try:
        config = configFromArgs_load(args)
        loggingWithConfig_setup(args, config, logging_setup)
        return int(COMMANDS[args.command](args, config))
    except (UnknownPatternError, ConfigError, CorpusError, yaml.YAMLError) as e:
        return usageError_report(str(e))
    except ValueError as e:
        # yaml_load rejects non-mapping documents with a bare ValueError
        return usageError_report(f"config: {e}")
    except OSError as e:
        return usageError_report(str(e))
    except KeyboardInterrupt:
        print("\nShutting down...", file=sys.stderr)
        return int(ExitCode.USAGE_ERROR)


if __name__ == "__main__":
    sys.exit(main())
