"""Runner bootstrap helpers for config, logging, and option resolution."""

from __future__ import annotations

import argparse
import logging
import os
from pathlib import Path
from typing import Callable, Optional, TextIO

from condlint.common.config import Config, ConfigLoader
from condlint.common.runtime_models import CheckOptions, CorpusOptions
from condlint.common.settings import settings
from condlint.common.types import PatternKind
from condlint.detectors.catalog import pattern_parse
from condlint.report.emitter import ReportFormat

logger = logging.getLogger(__name__)

__all__ = [
    "configFromArgs_load",
    "loggingWithConfig_setup",
    "patterns_resolve",
    "checkOptions_resolve",
    "corpusOptions_resolve",
    "reportFormat_resolve",
    "color_isEnabled",
]


def _patternsArg_split(value: Optional[str]) -> Optional[list[str]]:
    if value is None:
        return None
    return [part.strip() for part in value.split(",") if part.strip()]


def configFromArgs_load(args: argparse.Namespace) -> Config:
    """
    Load configuration with CLI flag overrides applied.

    Args:
        args: Parsed CLI args.

    Returns:
        Loaded config.

    Raises:
        FileNotFoundError: If an explicit --config path does not exist.
        ConfigError: If a config or flag value is invalid.
        yaml.YAMLError: If the config file is not valid YAML.
    """
    config_path: Path | None = Path(args.config) if getattr(args, "config", None) else None
    config: Config = ConfigLoader.configWithOverrides_load(
        file_path=config_path,
        patterns=_patternsArg_split(getattr(args, "patterns", None)),
        format=getattr(args, "format", None),
        suggestions=getattr(args, "suggestions", None),
        workers=getattr(args, "workers", None),
        layout=getattr(args, "layout", None),
        skip_invalid=getattr(args, "skip_invalid", None),
        prevalence_basis=getattr(args, "prevalence_basis", None),
        out=getattr(args, "out", None),
    )
    return config


def loggingWithConfig_setup(
    args: argparse.Namespace,
    config: Config,
    logging_setup_func: Callable[[str, str, Optional[str], int], None],
) -> None:
    """
    Setup logging from config and CLI override.

    Args:
        args: Parsed CLI args.
        config: Loaded config.
        logging_setup_func: Logging setup callback.
    """
    log_level: str = getattr(args, "log_level", None) or config.logging.level
    workers = config.corpus.workers if args.command == "corpus" else config.check.workers
    logging_setup_func(log_level, config.logging.format, config.logging.file, workers)


def patterns_resolve(identifiers: list[str]) -> Optional[frozenset[PatternKind]]:
    """
    Resolve pattern identifiers into kinds.

    Args:
        identifiers: Identifiers from config or --patterns; empty means all.

    Returns:
        Selected kinds, or None for all fifteen.

    Raises:
        UnknownPatternError: On an identifier outside the catalogue.
    """
    if not identifiers:
        return None
    return frozenset(pattern_parse(identifier) for identifier in identifiers)


def checkOptions_resolve(config: Config) -> CheckOptions:
    """
    Resolve `check` options from the loaded config.

    Args:
        config: Loaded config with CLI overrides applied.

    Returns:
        Typed check options.
    """
    options = CheckOptions(
        patterns=patterns_resolve(config.check.patterns),
        suggestions=config.check.suggestions,
        skip_invalid=config.check.skip_invalid,
        workers=config.check.workers,
    )
    logger.debug("Check options: %s", options)
    return options


def corpusOptions_resolve(config: Config) -> CorpusOptions:
    """
    Resolve corpus options from the loaded config.

    Args:
        config: Loaded config with CLI overrides applied.

    Returns:
        Typed corpus options.
    """
    options = CorpusOptions(
        patterns=patterns_resolve(config.check.patterns),
        workers=config.corpus.workers,
        prevalence_basis=config.corpus.prevalence_basis,
        skip_invalid=config.corpus.skip_invalid,
    )
    logger.debug("Corpus options: %s", options)
    return options


def reportFormat_resolve(config: Config, stream: TextIO) -> ReportFormat:
    """
    Pick the report format.

    Args:
        config: Loaded config; `check.format` None selects automatically.
        stream: Stream the report is written to.

    Returns:
        Configured format, else TEXT on a terminal and JSON otherwise.
    """
    if config.check.format is not None:
        return ReportFormat(config.check.format)
    return ReportFormat.TEXT if stream.isatty() else ReportFormat.JSON


def color_isEnabled(fmt: ReportFormat, stream: TextIO) -> bool:
    """
    Decide whether text output is coloured.

    Args:
        fmt: Resolved report format.
        stream: Stream the report is written to.

    Returns:
        True for TEXT on a terminal unless NO_COLOR is set.
    """
    if fmt is not ReportFormat.TEXT:
        return False
    if os.environ.get(settings.NO_COLOR_ENV):
        return False
    return stream.isatty()
