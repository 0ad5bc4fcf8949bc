"""Exception hierarchy for condlint"""

from __future__ import annotations

from typing import Sequence

__all__ = [
    "CondlintError",
    "InvalidModuleError",
    "CorpusError",
    "UnknownPatternError",
    "ConfigError",
]


class CondlintError(Exception):
    """Base class for every error condlint raises on purpose"""


class InvalidModuleError(CondlintError):
    """Detection was requested on a module that failed to parse"""

    def __init__(self, path: str, message: str) -> None:
        """
        Create error for an unparseable module

        Args:
            path: Module path.
            message: First parse error message.
        """
        super().__init__(f"{path}: cannot analyse invalid module ({message})")
        self.path = path


class CorpusError(CondlintError):
    """Corpus root or layout cannot be used"""


class UnknownPatternError(CondlintError):
    """A pattern identifier does not name one of the fifteen anti-patterns"""

    def __init__(self, identifier: str, valid: Sequence[str]) -> None:
        """
        Create error naming the bad identifier and the accepted ones

        Args:
            identifier: Identifier as given by the user.
            valid: All accepted identifiers.
        """
        super().__init__(
            f"unknown pattern '{identifier}'; valid patterns: {', '.join(valid)}"
        )
        self.identifier = identifier
        self.valid = tuple(valid)


class ConfigError(CondlintError, ValueError):
    """Configuration value is out of range or of the wrong kind"""
