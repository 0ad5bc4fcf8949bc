"""Application settings singleton - shared tool constants

This module provides a singleton Settings class that consolidates:
1. Report constants (percentage precision, rounding tolerance)
2. Tool constants (default layout, colour switch, indentation unit)

Usage:
    from condlint.common.settings import settings

    # Use anywhere in the application
    text = f"{value:.{settings.PERCENT_DECIMALS}f}"
"""

from typing import Optional

from condlint.common.config import DEFAULT_LAYOUT


class Settings:
    """Singleton holding constants shared across the tool

    This class provides:
    - Report constants shared by every emitter
    - Tool tuning constants (indentation, colour handling, corpus defaults)

    Loaded configuration is passed explicitly. The singleton keeps the CLI,
    the corpus analyzer and the report emitter on the same precision and
    defaults.
    """

    _instance: Optional["Settings"] = None

    def __new__(cls) -> "Settings":
        """
        Ensure only one Settings instance exists

        Returns:
            The shared instance.
        """
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    # =========================================================================
    # Report Constants
    # =========================================================================

    PERCENT_DECIMALS: int = 1
    """Decimal places for prevalence percentages in every report format"""

    PERCENT_SUM_TOLERANCE: float = 0.1
    """Allowed drift of a rounded percentage column from 100.0

    Plain rounding is kept while a column stays within this tolerance;
    beyond it the largest-remainder correction is applied.
    """

    RATE_DECIMALS: int = 6
    """Decimal places for anti-patterns-per-line rates in CSV/markdown output"""

    THRESHOLD_SIGMAS: float = 2.0
    """Standard deviations above the mean that mark a student cell as notable"""

    # =========================================================================
    # Tool Constants
    # =========================================================================

    DEFAULT_LAYOUT: str = DEFAULT_LAYOUT
    """Corpus layout used when neither config nor CLI gives one"""

    DEFAULT_INDENT_UNIT: str = "    "
    """Indentation added by rewrites when the source gives no better hint"""

    NO_COLOR_ENV: str = "NO_COLOR"
    """Environment variable that disables ANSI colour in text output"""

    SOURCE_SUFFIX: str = ".py"
    """Suffix of files collected when a directory is passed to `check`"""


# Global singleton instance
settings = Settings()
"""Global settings singleton instance

Import this anywhere in the application:
    from condlint.common.settings import settings
"""
