"""Descriptions of the fifteen anti-patterns and identifier lookup"""

from __future__ import annotations

from dataclasses import dataclass

from condlint.common.errors import UnknownPatternError
from condlint.common.types import PatternKind

__all__ = ["PatternInfo", "pattern_describe", "pattern_parse", "patterns_list"]


@dataclass(frozen=True)
class PatternInfo:
    """Catalogue entry of one anti-pattern"""

    identifier: str
    title: str
    description: str
    example: str
    fixable: bool  # False when only a textual hint is offered


# fmt: off
_CATALOG: dict[PatternKind, PatternInfo] = {
    PatternKind.IF_ELSE_RETURN_BOOL: PatternInfo(
        "if_else_return_bool", "If Else Return Bool",
        "The if and the else return opposite boolean literals; the condition can be returned directly.",
        "if cond:\n    return True\nelse:\n    return False\n",
        True,
    ),
    PatternKind.CONFUSING_ELSE: PatternInfo(
        "confusing_else", "Confusing Else",
        "The else holds nothing but another if/else, so the two levels can be flattened into elif branches.",
        "if cond:\n    a += 1\nelse:\n    if cond2:\n        b += 1\n    else:\n        c += 1\n",
        True,
    ),
    PatternKind.NESTED_IF: PatternInfo(
        "nested_if", "Nested If",
        "An if holds nothing but another if; the conditions can be merged with 'and'.",
        "if cond:\n    if cond2:\n        a += 1\n",
        True,
    ),
    PatternKind.DUPLICATE_IF_ELSE_STATEMENT: PatternInfo(
        "duplicate_if_else_statement", "Duplicate If/Else Statements",
        "The last statement of the if and the else is the same; it does not depend on the condition.",
        "if cond:\n    a += 1\n    b += 1\nelse:\n    c += 1\n    b += 1\n",
        True,
    ),
    PatternKind.IF_RETURN_BOOL: PatternInfo(
        "if_return_bool", "If Return Bool",
        "An if returns a boolean literal and the following statement returns its opposite; the condition can be returned.",
        "if cond:\n    return True\nreturn False\n",
        True,
    ),
    PatternKind.EMPTY_IF_BODY: PatternInfo(
        "empty_if_body", "Empty If Body",
        "An if or elif body contains no functional code, only 'pass' or self-assignments.",
        "if cond:\n    pass\n",
        False,
    ),
    PatternKind.UNNECESSARY_ELIF: PatternInfo(
        "unnecessary_elif", "Unnecessary Elif",
        "The elif tests the inverse of the if condition and can be replaced with else.",
        "if cond:\n    cond += 1\nelif not cond:\n    print(cond)\n",
        True,
    ),
    PatternKind.ELSE_IF: PatternInfo(
        "else_if", "Else If",
        "An else contains only an if statement, which an elif could replace.",
        "if cond:\n    cond += 1\nelse:\n    if not cond:\n        print(cond)\n",
        True,
    ),
    PatternKind.EMPTY_ELSE_BODY: PatternInfo(
        "empty_else_body", "Empty Else Body",
        "An else body contains no functional code, only 'pass' or self-assignments.",
        "if cond:\n    cond += 1\nelse:\n    pass\n",
        False,
    ),
    PatternKind.UNNECESSARY_ELSE: PatternInfo(
        "unnecessary_else", "Unnecessary Else",
        "One branch consists only of statements that end the other branch; the else can be removed.",
        "if cond:\n    a += 1\n    b += 1\nelse:\n    b += 1\n",
        True,
    ),
    PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS: PatternInfo(
        "several_duplicate_if_else_statements", "Sev. Duplicate If/Else Statements",
        "Several trailing statements are repeated in the if and the else.",
        "if cond:\n    a += 1\n    b += 1\n    print(b)\nelse:\n    c += 1\n    b += 1\n    print(b)\n",
        True,
    ),
    PatternKind.IF_ELSE_ASSIGN_RETURN: PatternInfo(
        "if_else_assign_return", "If/Else Assign Return",
        "Both branches assign one variable which is returned immediately after the if statement.",
        "if cond:\n    name = a\nelse:\n    name = b\nreturn name\n",
        True,
    ),
    PatternKind.DUPLICATE_IF_ELSE_BODY: PatternInfo(
        "duplicate_if_else_body", "Duplicate If/Else Body",
        "The entire if body is duplicated in the else.",
        "if cond:\n    b += 1\nelse:\n    b += 1\n",
        True,
    ),
    PatternKind.IF_ELSE_ASSIGN_BOOL: PatternInfo(
        "if_else_assign_bool", "If/Else Assign Bool",
        "Both branches assign opposite boolean literals; the condition itself can be assigned.",
        "if cond:\n    name = True\nelse:\n    name = False\n",
        True,
    ),
    PatternKind.IF_ELSE_ASSIGN_BOOL_RETURN: PatternInfo(
        "if_else_assign_bool_return", "If/Else Assign Bool Return",
        "Both branches assign opposite boolean literals to a variable that is then returned.",
        "if cond:\n    name = True\nelse:\n    name = False\nreturn name\n",
        True,
    ),
}
# fmt: on


def pattern_describe(kind: PatternKind) -> PatternInfo:
    """
    Catalogue entry for an anti-pattern

    Args:
        kind: Anti-pattern.

    Returns:
        Its PatternInfo.
    """
    return _CATALOG[kind]


def patterns_list() -> list[PatternInfo]:
    """
    Every catalogue entry in declaration order

    Returns:
        Fifteen PatternInfo records.
    """
    return [_CATALOG[kind] for kind in PatternKind]


def pattern_parse(identifier: str) -> PatternKind:
    """
    Resolve a user-supplied pattern identifier

    Surrounding whitespace, case and dashes are tolerated, so
    `Nested-If` resolves like `nested_if`.

    Args:
        identifier: Identifier from the command line or configuration.

    Returns:
        Matching PatternKind.

    Raises:
        UnknownPatternError: If nothing matches.
    """
    normalized = identifier.strip().lower().replace("-", "_")
    for kind in PatternKind:
        if kind.value == normalized:
            return kind
    raise UnknownPatternError(identifier, [kind.value for kind in PatternKind])
