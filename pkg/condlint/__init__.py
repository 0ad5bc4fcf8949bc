"""
condlint: conditional-statement anti-pattern detection for Python code.
Finds the fifteen classic if/elif/else anti-patterns, suggests rewrites and
aggregates prevalence statistics over corpora of student submissions.
"""

from importlib import metadata


def _version_get() -> str:
    """
    Get installed distribution version, or 'dev' when running from a checkout

    Returns:
        Version string.
    """
    try:
        return metadata.version("condlint")
    except metadata.PackageNotFoundError:
        return "dev"


__version__ = _version_get()
__author__ = "condlint contributors"
