"""
Aggregate corpus statistics.

Counts are kept per (group, pattern) cell; every derived figure (prevalence,
per-line rates, the student-count mean and population standard deviation)
is computed from those cells on demand so that merging two partial results
is plain addition.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, TypeVar, Union

from condlint.common.config import VALID_PREVALENCE_BASES
from condlint.common.settings import settings
from condlint.common.types import Diagnostic, ParseError, PatternKind, SubmissionMeta

__all__ = [
    "FileResult",
    "InvalidSubmission",
    "CorpusStats",
    "CorpusSummary",
    "stats_build",
    "compute_ordering",
    "summary_compute",
]

Cell = tuple[str, PatternKind]
_Key = TypeVar("_Key", str, Cell)


@dataclass(frozen=True)
class FileResult:
    """Outcome of analysing one submission"""

    meta: SubmissionMeta
    diagnostics: tuple[Diagnostic, ...]
    lloc: int
    parse_errors: tuple[ParseError, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.parse_errors


@dataclass(frozen=True)
class InvalidSubmission:
    """A submission excluded from the counts, with its first parse error"""

    meta: SubmissionMeta
    error: ParseError


@dataclass(frozen=True)
class CorpusStats:
    """Per-group, per-pattern tallies of a corpus

    Only groups with at least one valid submission appear in `groups`.
    Cells absent from the mappings are zero.
    """

    groups: tuple[str, ...] = ()
    patterns: tuple[PatternKind, ...] = tuple(PatternKind)
    count: dict[Cell, int] = field(default_factory=dict)
    student_sets: dict[Cell, frozenset[str]] = field(default_factory=dict)
    submissions_with: dict[Cell, int] = field(default_factory=dict)
    lloc: dict[str, int] = field(default_factory=dict)
    submissions: dict[str, int] = field(default_factory=dict)
    student_ids: frozenset[str] = frozenset()
    invalid: tuple[InvalidSubmission, ...] = ()
    prevalence_basis: str = "occurrence"

    # -------------------------------------------------------------------------
    # Cell accessors
    # -------------------------------------------------------------------------

    def count_get(self, group: str, kind: PatternKind) -> int:
        return self.count.get((group, kind), 0)

    def students(self, group: str, kind: PatternKind) -> int:
        return len(self.student_sets.get((group, kind), frozenset()))

    def submissionsWith_get(self, group: str, kind: PatternKind) -> int:
        return self.submissions_with.get((group, kind), 0)

    def groupTotal_get(self, group: str) -> int:
        return sum(self.count_get(group, kind) for kind in self.patterns)

    def patternTotal_get(self, kind: PatternKind) -> int:
        return sum(self.count_get(group, kind) for group in self.groups)

    def prevalence(self, group: str, kind: PatternKind) -> float:
        """
        Share of a pattern among a group's anti-patterns

        The basis is occurrences by default; with the `submission` basis the
        share is computed from the number of submissions containing each
        pattern.

        Args:
            group: Group id.
            kind: Anti-pattern.

        Returns:
            Fraction in [0, 1]; 0.0 when the group has no diagnostics.
        """
        if self.prevalence_basis == "submission":
            cell = self.submissionsWith_get(group, kind)
            total = sum(self.submissionsWith_get(group, other) for other in self.patterns)
        else:
            cell = self.count_get(group, kind)
            total = self.groupTotal_get(group)
        return cell / total if total else 0.0

    def rate(self, group: str) -> float:
        """
        Anti-patterns per logical line of a group

        Args:
            group: Group id.

        Returns:
            Rate, 0.0 for a group without logical lines.
        """
        lines = self.lloc.get(group, 0)
        return self.groupTotal_get(group) / lines if lines else 0.0

    def patternRate_get(self, kind: PatternKind) -> float:
        lines = self.lloc_total
        return self.patternTotal_get(kind) / lines if lines else 0.0

    def unique_students_total(self, kind: PatternKind) -> int:
        students: set[str] = set()
        for group in self.groups:
            students.update(self.student_sets.get((group, kind), frozenset()))
        return len(students)

    # -------------------------------------------------------------------------
    # Corpus-wide figures
    # -------------------------------------------------------------------------

    @property
    def total_diagnostics(self) -> int:
        return sum(self.count_get(group, kind) for group in self.groups for kind in self.patterns)

    @property
    def lloc_total(self) -> int:
        return sum(self.lloc.get(group, 0) for group in self.groups)

    @property
    def valid_submissions(self) -> int:
        return sum(self.submissions.values())

    def studentCells_get(self) -> list[int]:
        return [self.students(group, kind) for group in self.groups for kind in self.patterns]

    @property
    def mean_students(self) -> float:
        """
        Mean unique-student count over every (group, pattern) cell

        Returns:
            Arithmetic mean, 0.0 without cells.
        """
        cells = self.studentCells_get()
        return statistics.fmean(cells) if cells else 0.0

    @property
    def sd_students(self) -> float:
        """
        Population standard deviation of the unique-student cells

        Returns:
            Standard deviation, 0.0 without cells.
        """
        cells = self.studentCells_get()
        return statistics.pstdev(cells) if cells else 0.0

    @property
    def threshold2sd(self) -> float:
        return self.mean_students + settings.THRESHOLD_SIGMAS * self.sd_students

    def isAboveThreshold_check(self, group: str, kind: PatternKind) -> bool:
        return self.students(group, kind) > self.threshold2sd

    # -------------------------------------------------------------------------
    # Merging
    # -------------------------------------------------------------------------

    def merge(self, other: CorpusStats) -> CorpusStats:
        """
        Combine the statistics of two disjoint parts of a corpus

        Args:
            other: Statistics of the other part.

        Returns:
            Statistics equal to analysing both parts together.

        Raises:
            ValueError: If the parts use different patterns or bases.
        """
        if self.patterns != other.patterns or self.prevalence_basis != other.prevalence_basis:
            raise ValueError("cannot merge statistics with different patterns or basis")
        return CorpusStats(
            groups=tuple(sorted(set(self.groups) | set(other.groups))),
            patterns=self.patterns,
            count=_counts_add(self.count, other.count),
            student_sets=_sets_union(self.student_sets, other.student_sets),
            submissions_with=_counts_add(self.submissions_with, other.submissions_with),
            lloc=_counts_add(self.lloc, other.lloc),
            submissions=_counts_add(self.submissions, other.submissions),
            student_ids=self.student_ids | other.student_ids,
            invalid=tuple(
                sorted(self.invalid + other.invalid, key=lambda item: _metaKey_get(item.meta))
            ),
            prevalence_basis=self.prevalence_basis,
        )


def _counts_add(first: Mapping[_Key, int], second: Mapping[_Key, int]) -> dict[_Key, int]:
    merged = dict(first)
    for key, value in second.items():
        merged[key] = merged.get(key, 0) + value
    return dict(sorted(merged.items(), key=lambda item: _keyOrder_get(item[0])))


def _sets_union(
    first: dict[Cell, frozenset[str]], second: dict[Cell, frozenset[str]]
) -> dict[Cell, frozenset[str]]:
    merged = dict(first)
    for key, value in second.items():
        merged[key] = merged.get(key, frozenset()) | value
    return dict(sorted(merged.items(), key=lambda item: _keyOrder_get(item[0])))


def _keyOrder_get(key: Union[str, Cell]) -> tuple[str, str]:
    if isinstance(key, tuple):
        return (key[0], key[1].value)
    return (key, "")


def _metaKey_get(meta: SubmissionMeta) -> tuple[str, str, str]:
    return (meta.group_id, meta.student_id, meta.path)


def stats_build(
    results: Iterable[FileResult],
    patterns: Optional[Sequence[PatternKind]] = None,
    prevalence_basis: str = "occurrence",
) -> CorpusStats:
    """
    Tally per-file results into corpus statistics

    Invalid submissions are set aside with their first parse error and do not
    contribute to any count, line total or student set.

    Args:
        results: Per-file outcomes in any order.
        patterns: Pattern dimension of the matrices; all fifteen by default.
        prevalence_basis: `occurrence` or `submission`.

    Returns:
        CorpusStats independent of the order of `results`.

    Raises:
        ValueError: On an unknown prevalence basis.
    """
    if prevalence_basis not in VALID_PREVALENCE_BASES:
        raise ValueError(
            f"prevalence basis must be one of {', '.join(VALID_PREVALENCE_BASES)}, "
            f"got '{prevalence_basis}'"
        )
    kinds = tuple(patterns) if patterns is not None else tuple(PatternKind)
    kinds = tuple(kind for kind in PatternKind if kind in kinds)

    count: dict[Cell, int] = {}
    student_sets: dict[Cell, set[str]] = {}
    submissions_with: dict[Cell, int] = {}
    lloc: dict[str, int] = {}
    submissions: dict[str, int] = {}
    student_ids: set[str] = set()
    invalid: list[InvalidSubmission] = []

    for result in results:
        meta = result.meta
        if not result.is_valid:
            invalid.append(InvalidSubmission(meta=meta, error=result.parse_errors[0]))
            continue
        group = meta.group_id
        lloc[group] = lloc.get(group, 0) + result.lloc
        submissions[group] = submissions.get(group, 0) + 1
        student_ids.add(meta.student_id)
        seen: set[PatternKind] = set()
        for diagnostic in result.diagnostics:
            if diagnostic.pattern not in kinds:
                continue
            cell = (group, diagnostic.pattern)
            count[cell] = count.get(cell, 0) + 1
            student_sets.setdefault(cell, set()).add(meta.student_id)
            seen.add(diagnostic.pattern)
        for kind in seen:
            cell = (group, kind)
            submissions_with[cell] = submissions_with.get(cell, 0) + 1

    return CorpusStats(
        groups=tuple(sorted(submissions)),
        patterns=kinds,
        count=_counts_add({}, count),
        student_sets=_sets_union({}, {cell: frozenset(ids) for cell, ids in student_sets.items()}),
        submissions_with=_counts_add({}, submissions_with),
        lloc=_counts_add({}, lloc),
        submissions=_counts_add({}, submissions),
        student_ids=frozenset(student_ids),
        invalid=tuple(sorted(invalid, key=lambda item: _metaKey_get(item.meta))),
        prevalence_basis=prevalence_basis,
    )


def compute_ordering(stats: CorpusStats) -> tuple[list[str], list[PatternKind]]:
    """
    Report ordering of groups and patterns

    Groups are sorted by anti-patterns per logical line, patterns by their
    corpus-wide count per logical line, both descending; ties fall back to
    the identifier.

    Args:
        stats: Corpus statistics.

    Returns:
        Group order and pattern order.
    """
    groups = sorted(stats.groups, key=lambda group: (-stats.rate(group), group))
    patterns = sorted(
        stats.patterns,
        key=lambda kind: (-stats.patternRate_get(kind), -stats.patternTotal_get(kind), kind.value),
    )
    return groups, patterns


@dataclass(frozen=True)
class CorpusSummary:
    """Headline figures of a corpus run"""

    total_diagnostics: int
    valid_submissions: int
    invalid_submissions: int
    students: int
    lloc: int
    mean_students: float
    sd_students: float
    threshold2sd: float
    ranking: tuple[tuple[PatternKind, int], ...]  # by overall count, descending
    top_share: float  # combined share of the two most common patterns
    cells_above_threshold: dict[PatternKind, int]
    groups_with_pattern: dict[PatternKind, int]
    patterns_in_every_group: tuple[PatternKind, ...]
    groups_with_every_pattern: tuple[str, ...]


def summary_compute(stats: CorpusStats) -> CorpusSummary:
    """
    Compute the narrative statistics of a corpus

    Args:
        stats: Corpus statistics.

    Returns:
        CorpusSummary.
    """
    _, pattern_order = compute_ordering(stats)
    ranking = tuple(
        sorted(
            ((kind, stats.patternTotal_get(kind)) for kind in pattern_order),
            key=lambda item: (-item[1], item[0].value),
        )
    )
    total = stats.total_diagnostics
    top_share = sum(value for _, value in ranking[:2]) / total if total else 0.0

    threshold = stats.threshold2sd
    cells_above = {
        kind: sum(1 for group in stats.groups if stats.students(group, kind) > threshold)
        for kind in stats.patterns
    }
    groups_with = {
        kind: sum(1 for group in stats.groups if stats.count_get(group, kind) > 0)
        for kind in stats.patterns
    }
    every_group = tuple(
        kind for kind in stats.patterns if stats.groups and groups_with[kind] == len(stats.groups)
    )
    every_pattern = tuple(
        group
        for group in stats.groups
        if stats.patterns and all(stats.count_get(group, kind) > 0 for kind in stats.patterns)
    )

    return CorpusSummary(
        total_diagnostics=total,
        valid_submissions=stats.valid_submissions,
        invalid_submissions=len(stats.invalid),
        students=len(stats.student_ids),
        lloc=stats.lloc_total,
        mean_students=stats.mean_students,
        sd_students=stats.sd_students,
        threshold2sd=threshold,
        ranking=ranking,
        top_share=top_share,
        cells_above_threshold=cells_above,
        groups_with_pattern=groups_with,
        patterns_in_every_group=every_group,
        groups_with_every_pattern=every_pattern,
    )
