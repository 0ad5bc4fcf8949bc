"""Pytest configuration and shared fixtures for condlint tests

This module provides common fixtures and test utilities used across
unit and integration tests.
"""

import logging
from pathlib import Path
from typing import Callable, Generator, Mapping

import pytest

from condlint.common.types import PatternKind
from tests.tools.exemplars import EXEMPLARS


@pytest.fixture(autouse=True)
def setup_logging(caplog) -> Generator[None, None, None]:
    """Capture all log records and drop handlers installed by CLI runs"""
    root = logging.getLogger()
    level = root.level
    caplog.set_level(logging.DEBUG)
    yield
    for handler in list(root.handlers):
        if type(handler) in (logging.StreamHandler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


@pytest.fixture
def exemplars() -> dict[PatternKind, str]:
    """Function-wrapped reference snippet of every anti-pattern"""
    return dict(EXEMPLARS)


CorpusBuilder = Callable[[Mapping[str, str]], Path]


@pytest.fixture
def corpus_tree(tmp_path: Path) -> CorpusBuilder:
    """Build a corpus directory from relative paths and file contents

    Returns:
        Callable taking {"lab1/alice/main.py": source, ...} and returning
        the corpus root.
    """

    def build(files: Mapping[str, str]) -> Path:
        root = tmp_path / "corpus"
        root.mkdir(exist_ok=True)
        for relative, text in files.items():
            target = root / relative
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
        return root

    return build
