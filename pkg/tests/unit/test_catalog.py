"""Unit tests for the anti-pattern catalogue"""

import pytest

from condlint.common.errors import UnknownPatternError
from condlint.common.types import PatternKind
from condlint.detectors.catalog import pattern_describe, pattern_parse, patterns_list


class TestCatalog:
    """Catalogue entries"""

    def test_fifteen_entries(self):
        """Test every kind is described in declaration order"""
        infos = patterns_list()
        assert len(infos) == 15
        assert [info.identifier for info in infos] == [kind.identifier for kind in PatternKind]

    def test_entries_complete(self):
        """Test every entry carries a title, description and example"""
        for info in patterns_list():
            assert info.title
            assert info.description
            assert info.example.endswith("\n")

    def test_empty_bodies_not_fixable(self):
        """Test the hint-only patterns are flagged as such"""
        unfixable = {info.identifier for info in patterns_list() if not info.fixable}
        assert unfixable == {"empty_if_body", "empty_else_body"}

    def test_describe(self):
        """Test lookup by kind"""
        assert pattern_describe(PatternKind.NESTED_IF).identifier == "nested_if"


class TestPatternParse:
    """Identifier resolution"""

    @pytest.mark.parametrize(
        "text",
        ["nested_if", "NESTED_IF", " nested_if ", "Nested-If"],
    )
    def test_normalization(self, text):
        """Test case, whitespace and dashes are tolerated"""
        assert pattern_parse(text) is PatternKind.NESTED_IF

    def test_every_identifier_round_trips(self):
        """Test each identifier resolves to its own kind"""
        for kind in PatternKind:
            assert pattern_parse(kind.identifier) is kind

    def test_unknown(self):
        """Test unknown identifiers list the valid ones"""
        with pytest.raises(UnknownPatternError) as excinfo:
            pattern_parse("bogus")
        assert excinfo.value.identifier == "bogus"
        assert len(excinfo.value.valid) == 15
        assert "nested_if" in str(excinfo.value)
