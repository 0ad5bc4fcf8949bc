"""Common types and data structures for condlint"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional


class ExitCode(IntEnum):
    """Process exit codes, stable for CI use"""

    CLEAN = 0
    DIAGNOSTICS_FOUND = 1
    USAGE_ERROR = 2
    PARSE_ERRORS = 3


class PatternKind(Enum):
    """The fifteen conditional-statement anti-patterns

    Values are the stable identifiers used in every report format.
    """

    IF_ELSE_RETURN_BOOL = "if_else_return_bool"
    CONFUSING_ELSE = "confusing_else"
    NESTED_IF = "nested_if"
    DUPLICATE_IF_ELSE_STATEMENT = "duplicate_if_else_statement"
    IF_RETURN_BOOL = "if_return_bool"
    EMPTY_IF_BODY = "empty_if_body"
    UNNECESSARY_ELIF = "unnecessary_elif"
    ELSE_IF = "else_if"
    EMPTY_ELSE_BODY = "empty_else_body"
    UNNECESSARY_ELSE = "unnecessary_else"
    SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS = "several_duplicate_if_else_statements"
    IF_ELSE_ASSIGN_RETURN = "if_else_assign_return"
    DUPLICATE_IF_ELSE_BODY = "duplicate_if_else_body"
    IF_ELSE_ASSIGN_BOOL = "if_else_assign_bool"
    IF_ELSE_ASSIGN_BOOL_RETURN = "if_else_assign_bool_return"

    @property
    def identifier(self) -> str:
        """
        Get the report identifier

        Returns:
            lower_snake_case identifier.
        """
        return self.value


@dataclass(frozen=True, order=True)
class Span:
    """Source region with 1-based lines and 1-based inclusive columns"""

    line_start: int
    col_start: int
    line_end: int
    col_end: int

    def __post_init__(self) -> None:
        """
        Validate ordering of the span bounds

        Raises:
            ValueError: If a bound is below 1 or the end precedes the start.
        """
        if min(self.line_start, self.col_start, self.line_end, self.col_end) < 1:
            raise ValueError(f"Span bounds must be 1-based, got {self}")
        if (self.line_end, self.col_end) < (self.line_start, self.col_start):
            raise ValueError(f"Span end precedes start: {self}")

    def contains(self, other: Span) -> bool:
        """
        Check if another span lies within this one

        Args:
            other: Candidate inner span.

        Returns:
            True if `other` is enclosed by this span.
        """
        return (self.line_start, self.col_start) <= (other.line_start, other.col_start) and (
            other.line_end,
            other.col_end,
        ) <= (self.line_end, self.col_end)

    def span_merge(self, other: Span) -> Span:
        """
        Smallest span covering both spans

        Args:
            other: Span to cover as well.

        Returns:
            Covering span.
        """
        start = min((self.line_start, self.col_start), (other.line_start, other.col_start))
        end = max((self.line_end, self.col_end), (other.line_end, other.col_end))
        return Span(start[0], start[1], end[0], end[1])

    def dict_get(self) -> dict[str, int]:
        """
        Serializable form used by reports

        Returns:
            Mapping of the four bounds.
        """
        return {
            "line_start": self.line_start,
            "col_start": self.col_start,
            "line_end": self.line_end,
            "col_end": self.col_end,
        }


@dataclass(frozen=True)
class ParseError:
    """One reason a module could not be parsed"""

    span: Span
    message: str


@dataclass(frozen=True)
class RewriteSuggestion:
    """Replacement text for a diagnostic span

    `replacement_text` is None for hint-only suggestions, where no mechanical
    rewrite preserves behaviour.
    """

    replacement_text: Optional[str]
    rationale: str

    @property
    def is_hint(self) -> bool:
        """
        Whether this suggestion carries no rewrite

        Returns:
            True for hint-only suggestions.
        """
        return self.replacement_text is None


@dataclass(frozen=True)
class Diagnostic:
    """One detected anti-pattern occurrence"""

    pattern: PatternKind
    file: str
    span: Span
    message: str
    suggestion: Optional[RewriteSuggestion] = None

    def sortKey_get(self) -> tuple[str, Span, str, str]:
        """
        Deterministic ordering key: file, then span, then pattern

        Returns:
            Sort key tuple.
        """
        return (self.file, self.span, self.pattern.value, self.message)


@dataclass(frozen=True)
class SubmissionMeta:
    """Identity of one submission in a corpus"""

    group_id: str
    student_id: str
    path: str

    def __post_init__(self) -> None:
        """
        Reject empty identifiers

        Raises:
            ValueError: If group or student id is empty.
        """
        if not self.group_id or not self.student_id:
            raise ValueError(
                f"SubmissionMeta needs non-empty group and student ids, got "
                f"({self.group_id!r}, {self.student_id!r})"
            )
