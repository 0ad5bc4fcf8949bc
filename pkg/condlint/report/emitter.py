"""
Report serialization.

Diagnostics and corpus statistics are rendered as JSON, CSV, Markdown or
plain text. Every emitter is a pure function of its input; ordering comes
from `compute_ordering` and the diagnostic sort key, never from dict order.
"""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Any, Iterable, Optional, Sequence

from condlint.common.settings import settings
from condlint.common.types import Diagnostic, PatternKind
from condlint.corpus.stats import CorpusStats, compute_ordering, summary_compute
from condlint.detectors.catalog import PatternInfo

__all__ = [
    "ReportFormat",
    "PREVALENCE_CSV_HEADER",
    "percentages_round",
    "emit_diagnostics",
    "emit_prevalence_matrix",
    "emit_student_matrix",
    "emit_totals_bar_data",
    "emit_summary",
    "emit_invalid",
    "emit_patterns",
]

PREVALENCE_CSV_HEADER: tuple[str, ...] = (
    "pattern",
    "group",
    "count",
    "unique_students",
    "submissions_with",
    "prevalence_pct",
    "rate_per_lloc",
)
DIAGNOSTIC_CSV_HEADER: tuple[str, ...] = (
    "file",
    "pattern",
    "line_start",
    "col_start",
    "line_end",
    "col_end",
    "message",
    "suggestion",
    "rationale",
)
TOTAL_COLUMN: str = "Total"

_ANSI_BOLD = "\033[1m"
_ANSI_YELLOW = "\033[33m"
_ANSI_RESET = "\033[0m"


class ReportFormat(Enum):
    """Output formats shared by every report"""

    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"
    TEXT = "text"

    @property
    def extension(self) -> str:
        return {"json": "json", "csv": "csv", "markdown": "md", "text": "txt"}[self.value]


# =============================================================================
# Shared helpers
# =============================================================================


def _halfUp_round(value: float, decimals: int) -> float:
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def percentages_round(fractions: Sequence[float]) -> list[float]:
    """
    Round a column of shares to percentages with one decimal

    Each share is rounded half-up. That plain rounding is kept while the
    column stays within the configured tolerance of 100; otherwise the
    largest-remainder method distributes the rounding error.

    Args:
        fractions: Shares in [0, 1] summing to 1, or all zero.

    Returns:
        Percentages, one per input.
    """
    decimals = settings.PERCENT_DECIMALS
    plain = [_halfUp_round(value * 100, decimals) for value in fractions]
    if not any(fractions):
        return plain
    if abs(sum(plain) - 100.0) <= settings.PERCENT_SUM_TOLERANCE + 1e-9:
        return plain
    scale = 100 * 10**decimals
    scaled = [value * scale for value in fractions]
    floors = [math.floor(value) for value in scaled]
    missing = int(round(scale - sum(floors)))
    by_remainder = sorted(
        range(len(scaled)), key=lambda index: (-(scaled[index] - floors[index]), index)
    )
    for index in by_remainder[: max(missing, 0)]:
        floors[index] += 1
    return [value / 10**decimals for value in floors]


def _percent_format(value: float) -> str:
    return f"{value:.{settings.PERCENT_DECIMALS}f}"


def _rate_format(value: float) -> str:
    return f"{value:.{settings.RATE_DECIMALS}f}"


def _csv_render(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_render(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _markdown_escape(text: str) -> str:
    return text.replace("|", "\\|")


def _table_render(
    header: Sequence[str], rows: Sequence[Sequence[str]], fmt: ReportFormat
) -> str:
    """
    Render a table as Markdown or aligned plain text

    Args:
        header: Column titles; the first column is left-aligned, the rest right-aligned.
        rows: Cell texts.
        fmt: MARKDOWN or TEXT.

    Returns:
        Table text ending in a newline.
    """
    if fmt is ReportFormat.MARKDOWN:
        lines = ["| " + " | ".join(_markdown_escape(cell) for cell in header) + " |"]
        lines.append("|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|")
        for row in rows:
            lines.append("| " + " | ".join(_markdown_escape(cell) for cell in row) + " |")
        return "\n".join(lines) + "\n"

    widths = [len(cell) for cell in header]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    lines = []
    for row in [list(header), *rows]:
        cells = [row[0].ljust(widths[0])] + [
            cell.rjust(width) for cell, width in zip(row[1:], widths[1:])
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


# =============================================================================
# Diagnostics
# =============================================================================


def _diagnostic_dict(diagnostic: Diagnostic) -> dict[str, Any]:
    data: dict[str, Any] = {
        "file": diagnostic.file,
        "pattern": diagnostic.pattern.identifier,
        "span": diagnostic.span.dict_get(),
        "message": diagnostic.message,
    }
    if diagnostic.suggestion is not None:
        data["suggestion"] = {
            "replacement_text": diagnostic.suggestion.replacement_text,
            "rationale": diagnostic.suggestion.rationale,
        }
    return data


def emit_diagnostics(
    diagnostics: Iterable[Diagnostic], fmt: ReportFormat, color: bool = False
) -> str:
    """
    Serialize diagnostics

    Args:
        diagnostics: Diagnostics of any number of files.
        fmt: Output format.
        color: Use ANSI colour in TEXT output.

    Returns:
        Report text ordered by file path, then span. An empty list gives
        `[]` in JSON, a bare header in CSV and an empty string otherwise.
    """
    ordered = sorted(diagnostics, key=Diagnostic.sortKey_get)
    if fmt is ReportFormat.JSON:
        return _json_render([_diagnostic_dict(diagnostic) for diagnostic in ordered])
    if fmt is ReportFormat.CSV:
        rows = []
        for diagnostic in ordered:
            suggestion = diagnostic.suggestion
            rows.append(
                (
                    diagnostic.file,
                    diagnostic.pattern.identifier,
                    diagnostic.span.line_start,
                    diagnostic.span.col_start,
                    diagnostic.span.line_end,
                    diagnostic.span.col_end,
                    diagnostic.message,
                    (suggestion.replacement_text or "") if suggestion else "",
                    suggestion.rationale if suggestion else "",
                )
            )
        return _csv_render(DIAGNOSTIC_CSV_HEADER, rows)
    if fmt is ReportFormat.MARKDOWN:
        return _diagnosticsMarkdown_render(ordered)
    return _diagnosticsText_render(ordered, color)


def _diagnosticsMarkdown_render(ordered: Sequence[Diagnostic]) -> str:
    lines: list[str] = []
    current: Optional[str] = None
    for diagnostic in ordered:
        if diagnostic.file != current:
            if current is not None:
                lines.append("")
            current = diagnostic.file
            lines.append(f"### `{current}`")
            lines.append("")
        span = diagnostic.span
        lines.append(
            f"- line {span.line_start}, col {span.col_start}: "
            f"**{diagnostic.pattern.identifier}**: {diagnostic.message}"
        )
        if diagnostic.suggestion is not None:
            lines.append(f"  - suggestion: {diagnostic.suggestion.rationale}")
    return "\n".join(lines) + "\n" if lines else ""


def _diagnosticsText_render(ordered: Sequence[Diagnostic], color: bool) -> str:
    lines: list[str] = []
    for diagnostic in ordered:
        span = diagnostic.span
        location = f"{diagnostic.file}:{span.line_start}:{span.col_start}:"
        identifier = diagnostic.pattern.identifier
        if color:
            location = f"{_ANSI_BOLD}{location}{_ANSI_RESET}"
            identifier = f"{_ANSI_YELLOW}{identifier}{_ANSI_RESET}"
        lines.append(f"{location} {identifier} {diagnostic.message}")
        suggestion = diagnostic.suggestion
        if suggestion is not None and suggestion.is_hint:
            lines.append(f"    hint: {suggestion.rationale}")
    return "\n".join(lines) + "\n" if lines else ""


# =============================================================================
# Corpus matrices
# =============================================================================


def _presentPatterns_get(stats: CorpusStats) -> tuple[list[str], list[PatternKind]]:
    groups, patterns = compute_ordering(stats)
    return groups, [kind for kind in patterns if stats.patternTotal_get(kind) > 0]


def _prevalenceColumns_get(
    stats: CorpusStats, groups: Sequence[str], kinds: Sequence[PatternKind]
) -> dict[str, list[float]]:
    """
    Rounded prevalence percentages per column

    Args:
        stats: Corpus statistics.
        groups: Group columns.
        kinds: Pattern rows.

    Returns:
        Mapping from column name (groups and Total) to percentages in row order.
    """
    columns = {
        group: percentages_round([stats.prevalence(group, kind) for kind in kinds])
        for group in groups
    }
    if stats.prevalence_basis == "submission":
        weights = [
            sum(stats.submissionsWith_get(group, kind) for group in groups) for kind in kinds
        ]
    else:
        weights = [stats.patternTotal_get(kind) for kind in kinds]
    total = sum(weights)
    shares = [weight / total if total else 0.0 for weight in weights]
    columns[TOTAL_COLUMN] = percentages_round(shares)
    return columns


def _prevalence_records(stats: CorpusStats) -> list[dict[str, Any]]:
    groups, kinds = _presentPatterns_get(stats)
    columns = _prevalenceColumns_get(stats, groups, kinds)
    records: list[dict[str, Any]] = []
    for row, kind in enumerate(kinds):
        for group in groups:
            count = stats.count_get(group, kind)
            lines = stats.lloc.get(group, 0)
            records.append(
                {
                    "pattern": kind.identifier,
                    "group": group,
                    "count": count,
                    "unique_students": stats.students(group, kind),
                    "submissions_with": stats.submissionsWith_get(group, kind),
                    "prevalence_pct": columns[group][row],
                    "rate_per_lloc": count / lines if lines else 0.0,
                }
            )
        records.append(
            {
                "pattern": kind.identifier,
                "group": TOTAL_COLUMN,
                "count": stats.patternTotal_get(kind),
                "unique_students": stats.unique_students_total(kind),
                "submissions_with": sum(stats.submissionsWith_get(group, kind) for group in groups),
                "prevalence_pct": columns[TOTAL_COLUMN][row],
                "rate_per_lloc": stats.patternRate_get(kind),
            }
        )
    return records


def _recordCsv_row(record: dict[str, Any]) -> list[Any]:
    return [
        record["pattern"],
        record["group"],
        record["count"],
        record["unique_students"],
        record["submissions_with"],
        _percent_format(record["prevalence_pct"]),
        _rate_format(record["rate_per_lloc"]),
    ]


def _groups_dict(stats: CorpusStats, groups: Sequence[str]) -> list[dict[str, Any]]:
    return [
        {
            "group": group,
            "submissions": stats.submissions.get(group, 0),
            "lloc": stats.lloc.get(group, 0),
            "total": stats.groupTotal_get(group),
            "rate_per_lloc": stats.rate(group),
        }
        for group in groups
    ]


def emit_prevalence_matrix(stats: CorpusStats, fmt: ReportFormat) -> str:
    """
    Share of each anti-pattern within each group

    Rows are the patterns that occur at all, columns the groups plus a final
    Total column; both follow compute_ordering. Cells are percentages with
    one decimal.

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        Report text; a header-only table for empty statistics.
    """
    records = _prevalence_records(stats)
    if fmt is ReportFormat.CSV:
        return _csv_render(PREVALENCE_CSV_HEADER, [_recordCsv_row(record) for record in records])
    groups, kinds = _presentPatterns_get(stats)
    if fmt is ReportFormat.JSON:
        return _json_render(
            {
                "prevalence_basis": stats.prevalence_basis,
                "groups": _groups_dict(stats, groups),
                "patterns": [kind.identifier for kind in kinds],
                "cells": records,
            }
        )
    columns = _prevalenceColumns_get(stats, groups, kinds)
    header = ["Anti-pattern", *groups, TOTAL_COLUMN]
    rows = [
        [kind.identifier]
        + [_percent_format(columns[column][row]) for column in [*groups, TOTAL_COLUMN]]
        for row, kind in enumerate(kinds)
    ]
    return _table_render(header, rows, fmt)


def emit_student_matrix(stats: CorpusStats, fmt: ReportFormat) -> str:
    """
    Unique students who produced each anti-pattern in each group

    The Total column counts unique students over all groups. Cells above
    mean + 2 SD of all (group, pattern) cells are flagged: an `above_2sd`
    column in CSV/JSON, a trailing `*` in Markdown and text.

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        Report text; a header-only table for empty statistics.
    """
    groups, kinds = _presentPatterns_get(stats)
    records: list[dict[str, Any]] = []
    for record in _prevalence_records(stats):
        flagged = record["group"] != TOTAL_COLUMN and stats.isAboveThreshold_check(
            record["group"], PatternKind(record["pattern"])
        )
        records.append({**record, "above_2sd": flagged})

    if fmt is ReportFormat.CSV:
        header = (*PREVALENCE_CSV_HEADER, "above_2sd")
        rows = [
            _recordCsv_row(record) + ["true" if record["above_2sd"] else "false"]
            for record in records
        ]
        return _csv_render(header, rows)
    if fmt is ReportFormat.JSON:
        return _json_render(
            {
                "mean_students": stats.mean_students,
                "sd_students": stats.sd_students,
                "threshold2sd": stats.threshold2sd,
                "groups": _groups_dict(stats, groups),
                "patterns": [kind.identifier for kind in kinds],
                "cells": records,
            }
        )

    header = ["Anti-pattern", *groups, TOTAL_COLUMN]
    rows: list[list[str]] = []
    for kind in kinds:
        row = [kind.identifier]
        for group in groups:
            mark = "*" if stats.isAboveThreshold_check(group, kind) else ""
            row.append(f"{stats.students(group, kind)}{mark}")
        row.append(str(stats.unique_students_total(kind)))
        rows.append(row)
    table = _table_render(header, rows, fmt)
    if not rows:
        return table
    note = (
        f"* above mean + 2 SD ({stats.mean_students:.1f} + 2 x {stats.sd_students:.1f} "
        f"= {stats.threshold2sd:.1f} students)"
    )
    if fmt is ReportFormat.MARKDOWN:
        note = "\\" + note
    return f"{table}\n{note}\n"


def _totals_rows(stats: CorpusStats) -> list[tuple[PatternKind, int, float]]:
    total = stats.total_diagnostics
    rows = [
        (kind, stats.patternTotal_get(kind), stats.patternTotal_get(kind) / total if total else 0.0)
        for kind in stats.patterns
    ]
    return sorted(rows, key=lambda row: (-row[1], row[0].value))


def emit_totals_bar_data(stats: CorpusStats, fmt: ReportFormat) -> str:
    """
    Overall share of each anti-pattern, most common first

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        One (pattern, count, proportion) entry per pattern.
    """
    rows = _totals_rows(stats)
    if fmt is ReportFormat.JSON:
        return _json_render(
            [
                {"pattern": kind.identifier, "count": count, "proportion": proportion}
                for kind, count, proportion in rows
            ]
        )
    if fmt is ReportFormat.CSV:
        return _csv_render(
            ("pattern", "count", "proportion"),
            [(kind.identifier, count, repr(proportion)) for kind, count, proportion in rows],
        )
    percentages = percentages_round([proportion for _, _, proportion in rows])
    table_rows = [
        [kind.identifier, str(count), _percent_format(percent)]
        for (kind, count, _), percent in zip(rows, percentages)
    ]
    return _table_render(["Anti-pattern", "Count", "Share %"], table_rows, fmt)


# =============================================================================
# Summary and invalid tally
# =============================================================================


def _summary_dict(stats: CorpusStats) -> dict[str, Any]:
    summary = summary_compute(stats)
    return {
        "total_diagnostics": summary.total_diagnostics,
        "valid_submissions": summary.valid_submissions,
        "invalid_submissions": summary.invalid_submissions,
        "students": summary.students,
        "lloc": summary.lloc,
        "mean_students": summary.mean_students,
        "sd_students": summary.sd_students,
        "threshold2sd": summary.threshold2sd,
        "top_patterns": [kind.identifier for kind, count in summary.ranking[:2] if count],
        "top_share_pct": _halfUp_round(summary.top_share * 100, settings.PERCENT_DECIMALS),
        "cells_above_threshold": {
            kind.identifier: value for kind, value in summary.cells_above_threshold.items()
        },
        "groups_with_pattern": {
            kind.identifier: value for kind, value in summary.groups_with_pattern.items()
        },
        "patterns_in_every_group": [kind.identifier for kind in summary.patterns_in_every_group],
        "groups_with_every_pattern": list(summary.groups_with_every_pattern),
    }


def _summary_flatten(data: dict[str, Any]) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    for key, value in data.items():
        if isinstance(value, dict):
            pairs.extend((f"{key}.{name}", str(item)) for name, item in value.items())
        elif isinstance(value, list):
            pairs.append((key, ";".join(str(item) for item in value)))
        elif isinstance(value, float):
            pairs.append((key, f"{value:.4f}"))
        else:
            pairs.append((key, str(value)))
    return pairs


def emit_summary(stats: CorpusStats, fmt: ReportFormat) -> str:
    """
    Headline figures of a corpus run

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        JSON object, CSV `key,value` rows, or a readable listing.
    """
    data = _summary_dict(stats)
    if fmt is ReportFormat.JSON:
        return _json_render(data)
    pairs = _summary_flatten(data)
    if fmt is ReportFormat.CSV:
        return _csv_render(("key", "value"), pairs)
    if fmt is ReportFormat.MARKDOWN:
        return "\n".join(f"- **{key}**: {value}" for key, value in pairs) + "\n"
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in pairs) + "\n"


def emit_invalid(stats: CorpusStats, fmt: ReportFormat) -> str:
    """
    Submissions excluded because they do not parse

    Args:
        stats: Corpus statistics.
        fmt: Output format.

    Returns:
        One entry per rejected submission with its first parse error.
    """
    records = [
        {
            "group": item.meta.group_id,
            "student": item.meta.student_id,
            "path": item.meta.path,
            "line": item.error.span.line_start,
            "col": item.error.span.col_start,
            "message": item.error.message,
        }
        for item in stats.invalid
    ]
    header = ("group", "student", "path", "line", "col", "message")
    if fmt is ReportFormat.JSON:
        return _json_render({"invalid_submissions": len(records), "files": records})
    if fmt is ReportFormat.CSV:
        return _csv_render(header, [[record[key] for key in header] for record in records])
    rows = [[str(record[key]) for key in header] for record in records]
    return _table_render(list(header), rows, fmt)


def emit_patterns(infos: Sequence[PatternInfo], fmt: ReportFormat) -> str:
    """
    The anti-pattern catalogue

    Args:
        infos: Catalogue entries.
        fmt: Output format.

    Returns:
        Catalogue text.
    """
    if fmt is ReportFormat.JSON:
        return _json_render(
            [
                {
                    "identifier": info.identifier,
                    "title": info.title,
                    "description": info.description,
                    "example": info.example,
                    "fixable": info.fixable,
                }
                for info in infos
            ]
        )
    if fmt is ReportFormat.CSV:
        return _csv_render(
            ("identifier", "title", "fixable", "description"),
            [
                (info.identifier, info.title, str(info.fixable).lower(), info.description)
                for info in infos
            ],
        )
    if fmt is ReportFormat.MARKDOWN:
        blocks = [
            f"### {info.title} (`{info.identifier}`)\n\n{info.description}\n\n"
            f"```python\n{info.example}```\n"
            for info in infos
        ]
        return "\n".join(blocks)
    width = max((len(info.identifier) for info in infos), default=0)
    return "".join(f"{info.identifier.ljust(width)}  {info.title}\n" for info in infos)
