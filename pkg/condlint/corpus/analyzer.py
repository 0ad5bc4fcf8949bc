"""
Corpus analysis pipeline: parse, detect and tally every submission.

Files are independent, so with more than one worker they are analysed in a
process pool. Results are collected in submission order and tallied by
`stats_build`, whose output does not depend on that order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import Callable, Optional, Sequence

from condlint.common.runtime_models import CorpusOptions
from condlint.common.types import ParseError, PatternKind, Span, SubmissionMeta
from condlint.corpus.stats import CorpusStats, FileResult, stats_build
from condlint.detectors.engine import detect_all
from condlint.frontend.parser import moduleFromFile_parse

__all__ = ["CorpusAnalysis", "analyze_corpus", "file_analyze"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusAnalysis:
    """Statistics plus the per-file results they were built from"""

    stats: CorpusStats
    results: tuple[FileResult, ...]


def file_analyze(
    meta: SubmissionMeta,
    patterns: Optional[frozenset[PatternKind]] = None,
    suggestions: bool = False,
) -> FileResult:
    """
    Parse and check one submission

    Module-level so it can be shipped to worker processes.

    Args:
        meta: Submission to analyse.
        patterns: Restrict detection to these kinds; None keeps all.
        suggestions: Attach rewrite suggestions.

    Returns:
        FileResult; unreadable and unparseable files carry parse errors.
    """
    try:
        module = moduleFromFile_parse(meta.path)
    except OSError as exc:
        logger.warning("Skipping unreadable submission %s: %s", meta.path, exc.strerror or exc)
        error = ParseError(Span(1, 1, 1, 1), f"unreadable: {exc.strerror or exc}")
        return FileResult(meta=meta, diagnostics=(), lloc=0, parse_errors=(error,))
    if not module.is_valid:
        logger.info(
            "Invalid submission %s (group %s, student %s): %s",
            meta.path,
            meta.group_id,
            meta.student_id,
            module.parse_errors[0].message,
        )
        return FileResult(
            meta=meta, diagnostics=(), lloc=module.lloc, parse_errors=module.parse_errors
        )
    diagnostics = detect_all(module, patterns=patterns, suggestions=suggestions)
    return FileResult(meta=meta, diagnostics=tuple(diagnostics), lloc=module.lloc)


def analyze_corpus(
    metas: Sequence[SubmissionMeta],
    options: Optional[CorpusOptions] = None,
    worker_initializer: Optional[Callable[[], None]] = None,
) -> CorpusAnalysis:
    """
    Analyse every submission and tally the corpus statistics

    Args:
        metas: Submissions, typically from scan_corpus.
        options: Pattern filter, worker count and prevalence basis.
        worker_initializer: Run once in each worker process, e.g. to set up
            logging there.

    Returns:
        CorpusAnalysis with results ordered by group, student and path.
    """
    options = options or CorpusOptions()
    ordered = sorted(metas, key=lambda meta: (meta.group_id, meta.student_id, meta.path))
    logger.info("Analysing %d submission(s) with %d worker(s)", len(ordered), options.workers)

    results: list[FileResult]
    if options.workers > 1 and len(ordered) > 1:
        chunk = max(1, len(ordered) // (options.workers * 4))
        with ProcessPoolExecutor(
            max_workers=options.workers, initializer=worker_initializer
        ) as pool:
            results = list(
                pool.map(
                    file_analyze,
                    ordered,
                    repeat(options.patterns),
                    repeat(options.suggestions),
                    chunksize=chunk,
                )
            )
    else:
        results = [file_analyze(meta, options.patterns, options.suggestions) for meta in ordered]

    selected = sorted(options.patterns, key=lambda kind: kind.value) if options.patterns else None
    stats = stats_build(
        results,
        patterns=selected,
        prevalence_basis=options.prevalence_basis,
    )
    invalid_count = len(stats.invalid)
    if invalid_count:
        logger.info("%d invalid submission(s) excluded from the counts", invalid_count)
    return CorpusAnalysis(stats=stats, results=tuple(results))
