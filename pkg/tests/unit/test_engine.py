"""Unit tests for detection orchestration"""

import pytest

from condlint.common.errors import InvalidModuleError
from condlint.common.types import PatternKind
from condlint.detectors.engine import chain_detect, detect_all
from condlint.frontend import chains_walk, parse_module
from tests.tools.exemplars import EXEMPLARS, function_wrap

MIXED = function_wrap(
    """
    if cond:
        if cond2:
            a += 1
    if cond:
        return True
    else:
        return False
    """
)


class TestDetectAll:
    """detect_all over whole modules"""

    def test_invalid_module_rejected(self):
        """Test a module with parse errors raises"""
        module = parse_module("if x\n    pass\n", path="bad.py")
        with pytest.raises(InvalidModuleError, match="bad.py"):
            detect_all(module)

    def test_sorted_by_span(self):
        """Test diagnostics come back in source order"""
        diagnostics = detect_all(parse_module(MIXED))
        assert [d.pattern for d in diagnostics] == [
            PatternKind.NESTED_IF,
            PatternKind.IF_ELSE_RETURN_BOOL,
        ]
        assert diagnostics == sorted(diagnostics, key=lambda d: d.sortKey_get())

    def test_pattern_filter_is_filtration(self):
        """Test a restricted run equals the full run filtered by kind"""
        module = parse_module(MIXED)
        full = detect_all(module)
        only = detect_all(module, patterns=[PatternKind.IF_ELSE_RETURN_BOOL])
        assert only == [d for d in full if d.pattern is PatternKind.IF_ELSE_RETURN_BOOL]

    def test_empty_filter_reports_nothing(self):
        """Test an empty selection yields no diagnostics"""
        assert detect_all(parse_module(MIXED), patterns=[]) == []

    def test_suggestions_attached(self):
        """Test rewrite suggestions are attached on request"""
        diagnostics = detect_all(parse_module(MIXED), suggestions=True)
        assert all(d.suggestion is not None for d in diagnostics)

    def test_suggestions_omitted(self):
        """Test suggestions can be switched off"""
        diagnostics = detect_all(parse_module(MIXED), suggestions=False)
        assert all(d.suggestion is None for d in diagnostics)

    def test_file_path_carried(self):
        """Test diagnostics name the module path"""
        diagnostics = detect_all(parse_module(MIXED, path="lab/main.py"))
        assert {d.file for d in diagnostics} == {"lab/main.py"}

    def test_deterministic(self):
        """Test repeated runs give equal results"""
        module = parse_module(MIXED)
        assert detect_all(module) == detect_all(module)

    def test_chains_inside_loops_and_classes(self):
        """Test chains nested in compound statements are reached"""
        source = (
            "class Box:\n"
            "    def check(self, items):\n"
            "        for item in items:\n"
            "            if item:\n"
            "                return True\n"
            "            else:\n"
            "                return False\n"
        )
        diagnostics = detect_all(parse_module(source))
        assert [d.pattern for d in diagnostics] == [PatternKind.IF_ELSE_RETURN_BOOL]


class TestChainDetect:
    """chain_detect on a single chain"""

    def test_every_rule_consulted(self):
        """Test one chain can produce diagnostics from several rules"""
        module = parse_module(EXEMPLARS[PatternKind.IF_ELSE_ASSIGN_RETURN])
        site = next(chains_walk(module.body))
        found = chain_detect(site.chain, site.next_stmt, module.path)
        assert [d.pattern for d in found] == [PatternKind.IF_ELSE_ASSIGN_RETURN]
        assert found[0].suggestion is None
