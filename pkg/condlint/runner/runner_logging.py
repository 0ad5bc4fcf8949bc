"""
Runner logging configuration helpers.

Log records always go to stderr (plus an optional file) so stdout carries
reports only. Worker processes started for `--workers N` get the same level
and format through `workerLogging_init`, and their records are tagged with
the process id so interleaved lines can be told apart.
"""

from __future__ import annotations

import logging
import sys
from functools import partial
from typing import Callable

from condlint import __version__
from condlint.common.errors import ConfigError

__all__ = [
    "LOG_LEVELS",
    "logLevel_parse",
    "logFormat_resolve",
    "logging_setup",
    "workerLogging_init",
    "workerInitializer_get",
]

LOG_LEVELS: tuple[str, ...] = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def logLevel_parse(level: str) -> int:
    """
    Convert a level token from config or the CLI into a logging level.

    Args:
        level: Level name, case-insensitive.

    Returns:
        Numeric logging level.

    Raises:
        ConfigError: If the token is not one of LOG_LEVELS.
    """
    token = level.strip().upper()
    if token not in LOG_LEVELS:
        raise ConfigError(f"logging.level must be one of {', '.join(LOG_LEVELS)}, got '{level}'")
    return int(getattr(logging, token))


def logFormat_resolve(log_format: str, workers: int = 1) -> str:
    """
    Tag a log format with the tool version and, for pools, the process id.

    Args:
        log_format: Base formatter string from config.
        workers: Worker processes the run will use.

    Returns:
        Formatter string.
    """
    resolved = log_format.replace("%(name)s", f"condlint-{__version__}:%(name)s", 1)
    if workers > 1 and "%(process)d" not in resolved:
        resolved = resolved.replace("%(levelname)s", "%(levelname)s [pid %(process)d]", 1)
    return resolved


def logging_setup(level: str, log_format: str, log_file: str | None, workers: int = 1) -> None:
    """
    Configure root logging for a command-line run.

    Repeated calls in one process replace the handlers of the previous call.

    Args:
        level: Level token, e.g. `INFO`.
        log_format: Base formatter string.
        log_file: Optional log file path.
        workers: Worker processes the run will use.

    Raises:
        ConfigError: On an unknown level token.
        OSError: If the log file cannot be opened.
    """
    numeric_level = logLevel_parse(level)
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=numeric_level,
        format=logFormat_resolve(log_format, workers),
        handlers=handlers,
        force=True,
    )


def workerLogging_init(level: int, log_format: str) -> None:
    """
    Process-pool initializer giving a worker the parent's log setup.

    Args:
        level: Numeric level of the parent's root logger.
        log_format: Resolved formatter string of the parent.
    """
    logging.basicConfig(
        level=level,
        format=log_format,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def workerInitializer_get() -> Callable[[], None]:
    """
    Capture the current root logging setup as a picklable pool initializer.

    Returns:
        Zero-argument callable for `ProcessPoolExecutor(initializer=...)`.
    """
    root = logging.getLogger()
    log_format = logging.BASIC_FORMAT
    for handler in root.handlers:
        if handler.formatter is not None and handler.formatter._fmt:
            log_format = handler.formatter._fmt
            break
    return partial(workerLogging_init, root.getEffectiveLevel(), log_format)
