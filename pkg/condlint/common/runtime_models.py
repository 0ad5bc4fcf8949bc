"""Typed runtime models for check and corpus orchestration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from condlint.common.types import PatternKind


@dataclass(frozen=True)
class CheckOptions:
    """Resolved options for `condlint check`."""

    patterns: Optional[frozenset[PatternKind]] = None  # None means all fifteen
    suggestions: bool = True
    skip_invalid: bool = False
    workers: int = 1


@dataclass(frozen=True)
class CorpusOptions:
    """Resolved options for corpus analysis."""

    patterns: Optional[frozenset[PatternKind]] = None
    workers: int = 1
    prevalence_basis: str = "occurrence"
    skip_invalid: bool = True
    suggestions: bool = False
