"""
Corpus discovery.

A layout pattern such as `{group}/{student}/*.py` is matched against every
file path relative to the corpus root. `{group}` and `{student}` capture one
path segment each; `*` and `?` glob within a segment and a `**` segment spans
any number of directories.
"""

from __future__ import annotations

import logging
import os
import re
from pathlib import Path
from typing import Union

from condlint.common.errors import CorpusError
from condlint.common.settings import settings
from condlint.common.types import SubmissionMeta

__all__ = ["layout_compile", "scan_corpus"]

logger = logging.getLogger(__name__)

_PLACEHOLDER = re.compile(r"\{([^{}]*)\}")
_CAPTURES: tuple[str, ...] = ("group", "student")


def _segment_translate(segment: str) -> str:
    """
    Regex for one layout segment

    Args:
        segment: Layout text between slashes, other than `**`.

    Returns:
        Regex fragment matching a single path segment.

    Raises:
        CorpusError: On an unknown placeholder.
    """
    parts: list[str] = []
    position = 0
    for match in _PLACEHOLDER.finditer(segment):
        parts.append(_globText_translate(segment[position : match.start()]))
        name = match.group(1)
        if name not in _CAPTURES:
            raise CorpusError(
                f"unknown layout placeholder '{{{name}}}'; use {{group}} and {{student}}"
            )
        parts.append(f"(?P<{name}>[^/]+)")
        position = match.end()
    parts.append(_globText_translate(segment[position:]))
    return "".join(parts)


def _globText_translate(text: str) -> str:
    translated: list[str] = []
    for char in text:
        if char == "*":
            translated.append("[^/]*")
        elif char == "?":
            translated.append("[^/]")
        else:
            translated.append(re.escape(char))
    return "".join(translated)


def layout_compile(layout: str) -> re.Pattern[str]:
    """
    Compile a layout pattern into a regex over relative POSIX paths

    Args:
        layout: Layout with exactly one `{group}` and one `{student}`.

    Returns:
        Compiled pattern with named groups `group` and `student`.

    Raises:
        CorpusError: If a placeholder is missing, repeated or unknown.
    """
    for name in _CAPTURES:
        occurrences = layout.count(f"{{{name}}}")
        if occurrences != 1:
            raise CorpusError(
                f"layout '{layout}' must contain {{{name}}} exactly once (found {occurrences})"
            )
    segments = [segment for segment in layout.strip("/").split("/") if segment]
    pattern = ""
    for index, segment in enumerate(segments):
        last = index == len(segments) - 1
        if segment == "**":
            pattern += "(?:[^/]+/)*[^/]+" if last else "(?:[^/]+/)*"
        else:
            pattern += _segment_translate(segment) + ("" if last else "/")
    return re.compile(pattern)


def _walkError_raise(error: OSError) -> None:
    raise CorpusError(f"cannot read directory {error.filename}: {error.strerror}") from error


def scan_corpus(
    root: Union[str, Path], layout: str = settings.DEFAULT_LAYOUT
) -> list[SubmissionMeta]:
    """
    Find every submission under a corpus root

    Files that do not match the layout are ignored with an INFO notice;
    unreadable files are skipped with a WARNING.

    Args:
        root: Corpus root directory.
        layout: Layout pattern relative to the root.

    Returns:
        Submissions sorted by group, student and path.

    Raises:
        CorpusError: If the root is missing, not a directory or unreadable,
            or the layout is malformed.
    """
    root_path = Path(root)
    if not root_path.exists():
        raise CorpusError(f"corpus root does not exist: {root_path}")
    if not root_path.is_dir():
        raise CorpusError(f"corpus root is not a directory: {root_path}")
    if not os.access(root_path, os.R_OK | os.X_OK):
        raise CorpusError(f"cannot read directory {root_path}")
    matcher = layout_compile(layout)

    metas: list[SubmissionMeta] = []
    for directory, dir_names, file_names in os.walk(root_path, onerror=_walkError_raise):
        dir_names.sort()
        for file_name in sorted(file_names):
            file_path = Path(directory) / file_name
            relative = file_path.relative_to(root_path).as_posix()
            match = matcher.fullmatch(relative)
            if match is None:
                logger.info("Ignoring %s: does not match layout '%s'", relative, layout)
                continue
            if not os.access(file_path, os.R_OK):
                logger.warning("Skipping unreadable file %s", file_path)
                continue
            metas.append(
                SubmissionMeta(
                    group_id=match.group("group"),
                    student_id=match.group("student"),
                    path=str(file_path),
                )
            )

    logger.debug("Found %d submission(s) under %s", len(metas), root_path)
    return sorted(metas, key=lambda meta: (meta.group_id, meta.student_id, meta.path))
