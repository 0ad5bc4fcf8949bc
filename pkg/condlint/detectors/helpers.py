"""Structural predicates shared by the anti-pattern rules and the fix suggester"""

from __future__ import annotations

from typing import Sequence

from condlint.frontend.ir import (
    AssignStmt,
    BoolLit,
    CompareExpr,
    Expr,
    NotExpr,
    PassStmt,
    Stmt,
)

__all__ = ["stmt_equal", "negates", "common_suffix_len", "is_nonfunctional"]


def stmt_equal(a: Stmt, b: Stmt) -> bool:
    """
    Structural equality of two statements

    Comments, whitespace and redundant parentheses are ignored; literals and
    identifiers must match exactly.

    Args:
        a: First statement.
        b: Second statement.

    Returns:
        True if the structural fingerprints agree.
    """
    return a.structural == b.structural


def _negationOf_check(candidate: Expr, expr: Expr) -> bool:
    return isinstance(candidate, NotExpr) and candidate.inner.fp == expr.fp


def negates(a: Expr, b: Expr) -> bool:
    """
    Whether one condition is the syntactic negation of the other

    Recognised forms are a `not` wrapper around the other condition,
    comparisons of the same operands with complementary operators, and
    opposite boolean literals. The relation is symmetric.

    Args:
        a: First condition.
        b: Second condition.

    Returns:
        True if `b` negates `a`.
    """
    if _negationOf_check(b, a) or _negationOf_check(a, b):
        return True
    if isinstance(a, CompareExpr) and isinstance(b, CompareExpr):
        return a.lhs == b.lhs and a.rhs == b.rhs and a.op.inverse is b.op
    if isinstance(a, BoolLit) and isinstance(b, BoolLit):
        return a.value != b.value
    return False


def common_suffix_len(a: Sequence[Stmt], b: Sequence[Stmt]) -> int:
    """
    Length of the longest common trailing run of two blocks

    Args:
        a: First block.
        b: Second block.

    Returns:
        Number of trailing statements equal under stmt_equal.
    """
    count = 0
    while count < len(a) and count < len(b) and stmt_equal(a[-1 - count], b[-1 - count]):
        count += 1
    return count


def is_nonfunctional(body: Sequence[Stmt]) -> bool:
    """
    Whether a block does nothing: only `pass` and self-assignments

    Args:
        body: Statement block.

    Returns:
        True for a non-empty block of no-op statements.
    """
    if not body:
        return False
    for stmt in body:
        if isinstance(stmt, PassStmt):
            continue
        if isinstance(stmt, AssignStmt) and stmt.target_fp == stmt.value.fp:
            continue
        return False
    return True
