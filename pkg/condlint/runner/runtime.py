"""
Command execution for the `check`, `corpus` and `patterns` commands.

Each `*_run` function takes the parsed arguments and the loaded config,
writes its report to the given stream and returns the process exit code.
Expected failures surface as exceptions from `condlint.common.errors` (or
OSError) and are mapped to exit codes by `condlint.cli.main`.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from pathlib import Path
from typing import Optional, Sequence, TextIO

from condlint.common.config import Config
from condlint.common.errors import CorpusError
from condlint.common.settings import settings
from condlint.common.types import Diagnostic, ExitCode, ParseError, PatternKind
from condlint.corpus.analyzer import analyze_corpus
from condlint.corpus.scanner import scan_corpus
from condlint.corpus.stats import CorpusStats
from condlint.detectors.catalog import pattern_describe, pattern_parse, patterns_list
from condlint.detectors.engine import detect_all
from condlint.fixes.suggester import patch_render
from condlint.frontend.ir import ParsedModule
from condlint.frontend.parser import moduleFromFile_parse, parse_module
from condlint.report import emitter
from condlint.report.emitter import ReportFormat
from condlint.runner.bootstrap import (
    checkOptions_resolve,
    color_isEnabled,
    corpusOptions_resolve,
    reportFormat_resolve,
)
from condlint.runner.runner_logging import workerInitializer_get

logger = logging.getLogger(__name__)

__all__ = [
    "CheckedFile",
    "STDIN_PATH",
    "CORPUS_SECTIONS",
    "checkPaths_collect",
    "file_check",
    "check_run",
    "corpusSections_render",
    "corpus_run",
    "patterns_run",
]

STDIN_PATH: str = "-"
CORPUS_SECTIONS: tuple[str, ...] = ("prevalence", "students", "totals", "summary", "invalid")


@dataclass(frozen=True)
class CheckedFile:
    """Outcome of checking one input"""

    path: str
    source: str
    diagnostics: tuple[Diagnostic, ...]
    parse_errors: tuple[ParseError, ...]


# =============================================================================
# check
# =============================================================================


def checkPaths_collect(paths: Sequence[str]) -> list[str]:
    """
    Expand command-line paths into the files to check

    Directories contribute every `*.py` file below them in sorted order;
    files are taken as given whatever their suffix.

    Args:
        paths: Paths from the command line, `-` for standard input.

    Returns:
        File paths without duplicates, in command-line order.

    Raises:
        FileNotFoundError: If a path does not exist.
    """
    collected: list[str] = []
    seen: set[str] = set()
    for raw in paths:
        if raw == STDIN_PATH:
            candidates = [raw]
        else:
            path = Path(raw)
            if path.is_dir():
                candidates = sorted(
                    str(found)
                    for found in path.rglob(f"*{settings.SOURCE_SUFFIX}")
                    if found.is_file()
                )
            elif path.exists():
                candidates = [raw]
            else:
                raise FileNotFoundError(f"no such file or directory: {raw}")
        for candidate in candidates:
            if candidate not in seen:
                seen.add(candidate)
                collected.append(candidate)
    return collected


def _module_check(
    module: ParsedModule, patterns: Optional[frozenset[PatternKind]], suggestions: bool
) -> CheckedFile:
    if not module.is_valid:
        return CheckedFile(module.path, module.source, (), module.parse_errors)
    diagnostics = detect_all(module, patterns=patterns, suggestions=suggestions)
    return CheckedFile(module.path, module.source, tuple(diagnostics), ())


def file_check(
    path: str, patterns: Optional[frozenset[PatternKind]] = None, suggestions: bool = True
) -> CheckedFile:
    """
    Parse and check one file

    Module-level so it can be shipped to worker processes.

    Args:
        path: File to check.
        patterns: Restrict detection to these kinds; None keeps all.
        suggestions: Attach rewrite suggestions.

    Returns:
        CheckedFile with diagnostics, or parse errors when the file is invalid.

    Raises:
        OSError: If the file cannot be read.
    """
    return _module_check(moduleFromFile_parse(path), patterns, suggestions)


def _parseError_write(checked: CheckedFile, stream: TextIO) -> None:
    for error in checked.parse_errors:
        stream.write(
            f"{checked.path}:{error.span.line_start}:{error.span.col_start}: "
            f"parse error: {error.message}\n"
        )


def _patches_render(checked_files: Sequence[CheckedFile], fmt: ReportFormat) -> str:
    patches = [
        patch_render(checked.path, checked.source, checked.diagnostics)
        for checked in checked_files
        if checked.diagnostics
    ]
    diff = "".join(patch for patch in patches if patch)
    if not diff:
        return ""
    if fmt is ReportFormat.MARKDOWN:
        return f"\n```diff\n{diff}```\n"
    return f"\n{diff}"


def check_run(
    args: argparse.Namespace,
    config: Config,
    stdout: TextIO = sys.stdout,
    stderr: TextIO = sys.stderr,
    stdin: TextIO = sys.stdin,
) -> ExitCode:
    """
    Run `condlint check`

    Args:
        args: Parsed CLI args with `paths`.
        config: Loaded config with CLI overrides applied.
        stdout: Report stream.
        stderr: Stream for parse error notices.
        stdin: Source read for the `-` path.

    Returns:
        PARSE_ERRORS if an input did not parse (unless skipped), else
        DIAGNOSTICS_FOUND if anything was reported, else CLEAN.

    Raises:
        FileNotFoundError: If an input path does not exist.
        UnknownPatternError: On an unknown --patterns identifier.
    """
    options = checkOptions_resolve(config)
    fmt = reportFormat_resolve(config, stdout)
    files = checkPaths_collect(args.paths)
    logger.info("Checking %d file(s)", len(files))

    from_disk = [path for path in files if path != STDIN_PATH]
    checked_by_path: dict[str, CheckedFile] = {}
    if options.workers > 1 and len(from_disk) > 1:
        with ProcessPoolExecutor(
            max_workers=options.workers, initializer=workerInitializer_get()
        ) as pool:
            for checked in pool.map(
                file_check, from_disk, repeat(options.patterns), repeat(options.suggestions)
            ):
                checked_by_path[checked.path] = checked
    else:
        for path in from_disk:
            checked_by_path[path] = file_check(path, options.patterns, options.suggestions)
    if STDIN_PATH in files:
        module = parse_module(stdin.read(), path="<stdin>")
        checked_by_path[STDIN_PATH] = _module_check(module, options.patterns, options.suggestions)
    checked_files = [checked_by_path[path] for path in files]

    invalid = [checked for checked in checked_files if checked.parse_errors]
    for checked in invalid:
        _parseError_write(checked, stderr)

    diagnostics = [diagnostic for checked in checked_files for diagnostic in checked.diagnostics]
    stdout.write(emitter.emit_diagnostics(diagnostics, fmt, color=color_isEnabled(fmt, stdout)))
    if options.suggestions and fmt in (ReportFormat.TEXT, ReportFormat.MARKDOWN):
        stdout.write(_patches_render(checked_files, fmt))

    if invalid and not options.skip_invalid:
        return ExitCode.PARSE_ERRORS
    if diagnostics:
        return ExitCode.DIAGNOSTICS_FOUND
    return ExitCode.CLEAN


# =============================================================================
# corpus
# =============================================================================


def corpusSections_render(stats: CorpusStats, fmt: ReportFormat) -> dict[str, str]:
    """
    Render every corpus report

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        Report text keyed by section name, in CORPUS_SECTIONS order.
    """
    return {
        "prevalence": emitter.emit_prevalence_matrix(stats, fmt),
        "students": emitter.emit_student_matrix(stats, fmt),
        "totals": emitter.emit_totals_bar_data(stats, fmt),
        "summary": emitter.emit_summary(stats, fmt),
        "invalid": emitter.emit_invalid(stats, fmt),
    }


def _sections_join(sections: dict[str, str], fmt: ReportFormat) -> str:
    if fmt is ReportFormat.JSON:
        combined = {name: json.loads(text) for name, text in sections.items()}
        return json.dumps(combined, indent=2) + "\n"
    blocks: list[str] = []
    for name, text in sections.items():
        if fmt is ReportFormat.MARKDOWN:
            heading = f"## {name}\n\n"
        elif fmt is ReportFormat.CSV:
            heading = f"# {name}\n"
        else:
            heading = f"== {name} ==\n"
        blocks.append(heading + text)
    return "\n".join(blocks)


def _sections_write(sections: dict[str, str], fmt: ReportFormat, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for name, text in sections.items():
        target = out_dir / f"{name}.{fmt.extension}"
        target.write_text(text, encoding="utf-8")
        written.append(target)
    return written


def corpus_run(args: argparse.Namespace, config: Config, stdout: TextIO = sys.stdout) -> ExitCode:
    """
    Run `condlint corpus`

    Args:
        args: Parsed CLI args with `root`.
        config: Loaded config with CLI overrides applied.
        stdout: Report stream when no output directory is configured.

    Returns:
        PARSE_ERRORS if submissions were invalid and not skipped, else
        DIAGNOSTICS_FOUND if anything was counted, else CLEAN.

    Raises:
        CorpusError: If the root is unusable or no submission matches the layout.
        UnknownPatternError: On an unknown --patterns identifier.
    """
    options = corpusOptions_resolve(config)
    fmt = reportFormat_resolve(config, stdout)
    metas = scan_corpus(args.root, layout=config.corpus.layout)
    if not metas:
        raise CorpusError(f"no files under {args.root} match layout '{config.corpus.layout}'")

    analysis = analyze_corpus(metas, options, worker_initializer=workerInitializer_get())
    stats = analysis.stats
    sections = corpusSections_render(stats, fmt)
    if config.corpus.out:
        for target in _sections_write(sections, fmt, Path(config.corpus.out)):
            logger.info("Wrote %s", target)
    else:
        stdout.write(_sections_join(sections, fmt))

    logger.info(
        "%d anti-pattern(s) in %d valid submission(s); %d invalid",
        stats.total_diagnostics,
        stats.valid_submissions,
        len(stats.invalid),
    )
    if stats.invalid and not options.skip_invalid:
        return ExitCode.PARSE_ERRORS
    if stats.total_diagnostics:
        return ExitCode.DIAGNOSTICS_FOUND
    return ExitCode.CLEAN


# =============================================================================
# patterns
# =============================================================================


def patterns_run(args: argparse.Namespace, config: Config, stdout: TextIO = sys.stdout) -> ExitCode:
    """
    Run `condlint patterns`

    Args:
        args: Parsed CLI args with optional `identifiers`.
        config: Loaded config.
        stdout: Output stream.

    Returns:
        CLEAN.

    Raises:
        UnknownPatternError: On an identifier outside the catalogue.
    """
    identifiers: list[str] = list(getattr(args, "identifiers", None) or [])
    if identifiers:
        infos = [pattern_describe(pattern_parse(identifier)) for identifier in identifiers]
    else:
        infos = patterns_list()
    fmt = reportFormat_resolve(config, stdout)
    stdout.write(emitter.emit_patterns(infos, fmt))
    return ExitCode.CLEAN
