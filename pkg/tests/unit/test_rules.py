"""Unit tests for the anti-pattern rules"""

import time
from collections import Counter

import pytest

from condlint.common.types import PatternKind, Span
from condlint.detectors.engine import detect_all
from condlint.detectors.rules import (
    detect_assign_family,
    detect_confusing_else,
    detect_duplication_family,
    detect_else_if,
    detect_empty_else_body,
    detect_empty_if_body,
    detect_if_else_return_bool,
    detect_if_return_bool,
    detect_nested_if,
    detect_unnecessary_elif,
)
from condlint.frontend import chains_walk, parse_module
from tests.tools.exemplars import (
    CLEAN_SOURCE,
    EXEMPLARS,
    REFACTORED_SOLUTION,
    STUDENT_SOLUTION,
    function_wrap,
)

DUPLICATION_FAMILY = frozenset(
    {
        PatternKind.DUPLICATE_IF_ELSE_BODY,
        PatternKind.UNNECESSARY_ELSE,
        PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS,
        PatternKind.DUPLICATE_IF_ELSE_STATEMENT,
    }
)


def _kinds(source: str) -> list[PatternKind]:
    module = parse_module(source)
    assert module.is_valid, module.parse_errors
    return [diagnostic.pattern for diagnostic in detect_all(module, suggestions=False)]


def _site(source: str):
    return next(chains_walk(parse_module(source).body))


class TestExemplars:
    """Each catalogue snippet yields exactly its own diagnostic"""

    @pytest.mark.parametrize("kind", list(PatternKind), ids=lambda kind: kind.identifier)
    def test_exemplar_exact(self, kind):
        """Test one diagnostic of the matching kind and nothing else"""
        assert _kinds(EXEMPLARS[kind]) == [kind]

    def test_all_fifteen_fast(self):
        """Test the whole exemplar set runs well under a second"""
        started = time.perf_counter()
        found = Counter(kind for source in EXEMPLARS.values() for kind in _kinds(source))
        assert time.perf_counter() - started < 1.0
        assert set(found) == set(PatternKind)
        assert all(count == 1 for count in found.values())

    def test_clean_source(self):
        """Test idiomatic code yields nothing"""
        assert _kinds(CLEAN_SOURCE) == []


SINGLE_RULES = {
    PatternKind.IF_ELSE_RETURN_BOOL: detect_if_else_return_bool,
    PatternKind.IF_RETURN_BOOL: detect_if_return_bool,
    PatternKind.CONFUSING_ELSE: detect_confusing_else,
    PatternKind.ELSE_IF: detect_else_if,
    PatternKind.NESTED_IF: detect_nested_if,
    PatternKind.EMPTY_ELSE_BODY: detect_empty_else_body,
    PatternKind.UNNECESSARY_ELIF: detect_unnecessary_elif,
}


class TestRuleFunctions:
    """Rules called directly on a chain site"""

    @pytest.mark.parametrize("kind", list(SINGLE_RULES), ids=lambda kind: kind.identifier)
    def test_rule_on_own_exemplar(self, kind):
        """Test the rule reports its kind with the given path"""
        site = _site(EXEMPLARS[kind])
        diagnostic = SINGLE_RULES[kind](site.chain, site.next_stmt, path="lab1/alice/main.py")
        assert diagnostic is not None
        assert diagnostic.pattern is kind
        assert diagnostic.file == "lab1/alice/main.py"

    @pytest.mark.parametrize("kind", list(SINGLE_RULES), ids=lambda kind: kind.identifier)
    def test_rule_silent_on_clean_chain(self, kind):
        """Test no rule fires on an ordinary if/elif chain"""
        site = _site(CLEAN_SOURCE)
        assert SINGLE_RULES[kind](site.chain, site.next_stmt) is None


class TestWorkedExample:
    """The introductory student solution and its refactoring"""

    def test_student_solution(self):
        """Test the repeated append is an unnecessary else"""
        assert _kinds(STUDENT_SOLUTION) == [PatternKind.UNNECESSARY_ELSE]

    def test_refactored_solution(self):
        """Test the refactored version is clean"""
        assert _kinds(REFACTORED_SOLUTION) == []

    def test_message_names_shorter_branch(self):
        """Test the symmetric case names the if body"""
        diagnostics = detect_all(parse_module(STUDENT_SOLUTION), suggestions=False)
        assert "whole if body" in diagnostics[0].message


class TestSuppression:
    """Most specific member of each family wins"""

    def test_assign_bool_return_suppresses_others(self):
        """Test the bool-return variant hides bool and return variants"""
        kinds = _kinds(EXEMPLARS[PatternKind.IF_ELSE_ASSIGN_BOOL_RETURN])
        assert PatternKind.IF_ELSE_ASSIGN_BOOL not in kinds
        assert PatternKind.IF_ELSE_ASSIGN_RETURN not in kinds

    def test_several_suppresses_single(self):
        """Test the several variant hides the single variant"""
        kinds = _kinds(EXEMPLARS[PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS])
        assert PatternKind.DUPLICATE_IF_ELSE_STATEMENT not in kinds

    def test_duplicate_body_suppresses_unnecessary_else(self):
        """Test identical bodies report only the body duplicate"""
        kinds = _kinds(function_wrap("if cond:\n    a += 1\n    b += 1\nelse:\n    a += 1\n    b += 1\n"))
        assert kinds == [PatternKind.DUPLICATE_IF_ELSE_BODY]

    def test_unnecessary_else_suppresses_several(self):
        """Test a fully repeated shorter branch outranks the several variant"""
        source = function_wrap(
            "if cond:\n    a += 1\n    b += 1\n    c += 1\nelse:\n    b += 1\n    c += 1\n"
        )
        assert _kinds(source) == [PatternKind.UNNECESSARY_ELSE]

    def test_families_are_independent(self):
        """Test one chain can carry one diagnostic from each family"""
        source = function_wrap("if cond:\n    name = a\nelse:\n    name = a\nreturn name\n")
        kinds = _kinds(source)
        assert Counter(kinds) == Counter(
            [PatternKind.DUPLICATE_IF_ELSE_BODY, PatternKind.IF_ELSE_ASSIGN_RETURN]
        )


class TestReturnRules:
    """if/else returning booleans"""

    def test_same_literal_not_reported(self):
        """Test returning the same literal twice is not the pattern"""
        kinds = _kinds(function_wrap("if cond:\n    return True\nelse:\n    return True\n"))
        assert PatternKind.IF_ELSE_RETURN_BOOL not in kinds
        assert kinds == [PatternKind.DUPLICATE_IF_ELSE_BODY]

    def test_non_literal_returns_not_reported(self):
        """Test returning names is not the pattern"""
        assert _kinds(function_wrap("if cond:\n    return a\nelse:\n    return b\n")) == []

    def test_elif_chain_not_reported(self):
        """Test chains with elif are excluded"""
        source = function_wrap(
            "if cond:\n    return True\nelif cond2:\n    return False\nelse:\n    return False\n"
        )
        assert PatternKind.IF_ELSE_RETURN_BOOL not in _kinds(source)

    def test_if_return_bool_span_covers_following_return(self):
        """Test the diagnostic covers the if and the trailing return"""
        module = parse_module(EXEMPLARS[PatternKind.IF_RETURN_BOOL])
        diagnostic = detect_all(module)[0]
        assert diagnostic.span == Span(2, 5, 4, 16)

    def test_if_return_bool_needs_opposite(self):
        """Test the same literal after the if is not reported"""
        assert _kinds(function_wrap("if cond:\n    return True\nreturn True\n")) == []

    def test_if_return_bool_needs_adjacent_return(self):
        """Test an intervening statement breaks the pattern"""
        source = function_wrap("if cond:\n    return True\na += 1\nreturn False\n")
        assert _kinds(source) == []


class TestNestingRules:
    """confusing else, else if and nested if"""

    def test_else_with_more_than_if(self):
        """Test an else holding other statements is fine"""
        source = function_wrap("if cond:\n    a += 1\nelse:\n    b += 1\n    if cond2:\n        c += 1\n")
        assert _kinds(source) == []

    def test_else_holding_if_elif_chain_is_confusing(self):
        """Test a nested chain with elif and no else counts as confusing else"""
        source = function_wrap(
            "if cond:\n    a += 1\nelse:\n    if cond2:\n        b += 1\n    elif a:\n        c += 1\n"
        )
        assert _kinds(source) == [PatternKind.CONFUSING_ELSE]

    def test_elif_written_is_not_else_if(self):
        """Test real elif keywords are never reported"""
        source = function_wrap("if cond:\n    a += 1\nelif cond2:\n    b += 1\n")
        assert _kinds(source) == []

    def test_nested_if_with_else_inside(self):
        """Test an inner if/else cannot be merged"""
        source = function_wrap(
            "if cond:\n    if cond2:\n        a += 1\n    else:\n        b += 1\n"
        )
        assert _kinds(source) == []

    def test_nested_if_outer_has_else(self):
        """Test an outer else prevents merging"""
        source = function_wrap("if cond:\n    if cond2:\n        a += 1\nelse:\n    b += 1\n")
        assert _kinds(source) == []

    def test_triple_nesting_reports_twice(self):
        """Test each mergeable level is reported"""
        source = function_wrap("if a:\n    if b:\n        if c:\n            pass\n")
        kinds = _kinds(source)
        assert kinds.count(PatternKind.NESTED_IF) == 2
        assert kinds.count(PatternKind.EMPTY_IF_BODY) == 1


class TestEmptyBodies:
    """Empty if and else bodies"""

    def test_each_empty_branch_reported(self):
        """Test one diagnostic per empty if/elif branch, all on the chain span"""
        source = "if a:\n    pass\nelif b:\n    x = x\nelif c:\n    y = 1\n"
        site = _site(source)
        found = detect_empty_if_body(site.chain, site.next_stmt, "m.py")
        assert len(found) == 2
        assert {diag.span for diag in found} == {site.chain.span}
        assert "line 1" in found[0].message
        assert "line 3" in found[1].message
        assert found[1].message.startswith("elif")

    def test_empty_else(self):
        """Test self-assignment in else is an empty else"""
        source = function_wrap("if cond:\n    a += 1\nelse:\n    a = a\n")
        assert _kinds(source) == [PatternKind.EMPTY_ELSE_BODY]

    def test_docstring_like_expression_is_not_empty(self):
        """Test a bare expression counts as code"""
        assert _kinds(function_wrap("if cond:\n    'note'\n")) == []


class TestUnnecessaryElif:
    """elif testing the inverse condition"""

    def test_comparison_inverse(self):
        """Test inverse comparison operators"""
        source = function_wrap("if a > b:\n    c += 1\nelif a <= b:\n    c -= 1\n")
        assert _kinds(source) == [PatternKind.UNNECESSARY_ELIF]

    def test_three_branches_not_reported(self):
        """Test chains with more arms are left alone"""
        source = function_wrap(
            "if cond:\n    a += 1\nelif not cond:\n    b += 1\nelif cond2:\n    c += 1\n"
        )
        assert PatternKind.UNNECESSARY_ELIF not in _kinds(source)

    def test_with_else_not_reported(self):
        """Test an existing else excludes the pattern"""
        source = function_wrap(
            "if cond:\n    a += 1\nelif not cond:\n    b += 1\nelse:\n    c += 1\n"
        )
        assert PatternKind.UNNECESSARY_ELIF not in _kinds(source)


class TestFamilies:
    """Duplication and assignment families in isolation"""

    def test_duplication_needs_else(self):
        """Test a bare if never belongs to the family"""
        site = _site("if c:\n    a = 1\n")
        assert detect_duplication_family(site.chain, site.next_stmt) is None

    def test_several_message_counts(self):
        """Test the several variant reports the shared count"""
        site = _site(
            "if c:\n    x = 0\n    a = 1\n    b = 2\n    d = 3\n"
            "else:\n    y = 0\n    a = 1\n    b = 2\n    d = 3\n"
        )
        diagnostic = detect_duplication_family(site.chain, site.next_stmt, "m.py")
        assert diagnostic.pattern is PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS
        assert diagnostic.message.startswith("3 trailing")

    def test_assign_different_names(self):
        """Test assignments to different names are ignored"""
        site = _site("if c:\n    a = True\nelse:\n    b = False\n")
        assert detect_assign_family(site.chain, site.next_stmt) is None

    def test_assign_return_other_name(self):
        """Test returning another name is not an assign-return"""
        source = function_wrap("if cond:\n    name = a\nelse:\n    name = b\nreturn a\n")
        assert _kinds(source) == []

    def test_assign_attribute_target(self):
        """Test attribute targets are not bare-name assignments"""
        site = _site("if c:\n    self.v = True\nelse:\n    self.v = False\n")
        assert detect_assign_family(site.chain, site.next_stmt) is None

    def test_assign_bool_return_span(self):
        """Test the diagnostic span ends at the return"""
        module = parse_module(EXEMPLARS[PatternKind.IF_ELSE_ASSIGN_BOOL_RETURN])
        diagnostic = detect_all(module)[0]
        assert diagnostic.span.line_start == 2
        assert diagnostic.span.line_end == 6
