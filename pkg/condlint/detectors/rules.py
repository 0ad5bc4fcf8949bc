"""
One detection rule per conditional anti-pattern.

Every rule takes an if chain, the statement that follows it in the same block
(when the rule needs it) and the module path, and returns the diagnostic it
found or None. The duplication family and the assignment family each resolve
overlaps internally so that at most one member of a family fires per chain.
"""

from __future__ import annotations

from typing import Optional

from condlint.common.types import Diagnostic, PatternKind
from condlint.detectors.helpers import common_suffix_len, is_nonfunctional, negates
from condlint.frontend.ir import (
    AssignStmt,
    BoolLit,
    IfChain,
    IfChainStmt,
    NameExpr,
    ReturnStmt,
    Stmt,
)

__all__ = [
    "detect_if_else_return_bool",
    "detect_if_return_bool",
    "detect_confusing_else",
    "detect_else_if",
    "detect_nested_if",
    "detect_empty_if_body",
    "detect_empty_else_body",
    "detect_unnecessary_elif",
    "detect_duplication_family",
    "detect_assign_family",
]

DEFAULT_PATH: str = "<string>"


def _isIfElse_check(chain: IfChain) -> bool:
    return len(chain.branches) == 1 and chain.else_body is not None


def _isBareIf_check(chain: IfChain) -> bool:
    return len(chain.branches) == 1 and chain.else_body is None


def _returnedBool_get(body: tuple[Stmt, ...]) -> Optional[BoolLit]:
    """
    Boolean literal returned by a single-statement block

    Args:
        body: Statement block.

    Returns:
        The literal, or None if the block is not exactly `return True/False`.
    """
    if len(body) != 1:
        return None
    stmt = body[0]
    if isinstance(stmt, ReturnStmt) and isinstance(stmt.value, BoolLit):
        return stmt.value
    return None


def _returnsName_check(stmt: Optional[Stmt], name: str) -> bool:
    return (
        isinstance(stmt, ReturnStmt)
        and isinstance(stmt.value, NameExpr)
        and stmt.value.identifier == name
    )


def _soleChain_get(body: Optional[tuple[Stmt, ...]]) -> Optional[IfChain]:
    if body is not None and len(body) == 1 and isinstance(body[0], IfChainStmt):
        return body[0].chain
    return None


def detect_if_else_return_bool(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    if/else whose arms return opposite boolean literals

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        IF_ELSE_RETURN_BOOL diagnostic or None.
    """
    if not _isIfElse_check(chain):
        return None
    assert chain.else_body is not None
    first = _returnedBool_get(chain.branches[0].body)
    second = _returnedBool_get(chain.else_body)
    if first is None or second is None or first.value == second.value:
        return None
    return Diagnostic(
        pattern=PatternKind.IF_ELSE_RETURN_BOOL,
        file=path,
        span=chain.span,
        message="if/else returns opposite boolean literals; return the condition directly",
    )


def detect_if_return_bool(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    Bare if returning a boolean literal, followed by a return of the opposite one

    Args:
        chain: Chain to inspect.
        next_stmt: Statement following the chain in its block.
        path: Module path for the diagnostic.

    Returns:
        IF_RETURN_BOOL diagnostic spanning the chain and the return, or None.
    """
    if not _isBareIf_check(chain) or not isinstance(next_stmt, ReturnStmt):
        return None
    inside = _returnedBool_get(chain.branches[0].body)
    after = next_stmt.value
    if inside is None or not isinstance(after, BoolLit) or inside.value == after.value:
        return None
    return Diagnostic(
        pattern=PatternKind.IF_RETURN_BOOL,
        file=path,
        span=chain.span.span_merge(next_stmt.span),
        message="if returns a boolean literal and the next statement returns its opposite; "
        "return the condition directly",
    )


def detect_confusing_else(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    else block holding only an if chain with more than one exit path

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        CONFUSING_ELSE diagnostic or None.
    """
    nested = _soleChain_get(chain.else_body)
    if nested is None or (nested.else_body is None and len(nested.branches) == 1):
        return None
    return Diagnostic(
        pattern=PatternKind.CONFUSING_ELSE,
        file=path,
        span=chain.span,
        message="else contains only a nested if/else; flatten it into elif branches",
    )


def detect_else_if(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    else block holding only a single bare if

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        ELSE_IF diagnostic or None.
    """
    nested = _soleChain_get(chain.else_body)
    if nested is None or not _isBareIf_check(nested):
        return None
    return Diagnostic(
        pattern=PatternKind.ELSE_IF,
        file=path,
        span=chain.span,
        message="else contains only an if statement; use elif",
    )


def detect_nested_if(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    Bare if whose body is only another bare if

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        NESTED_IF diagnostic or None.
    """
    if not _isBareIf_check(chain):
        return None
    nested = _soleChain_get(chain.branches[0].body)
    if nested is None or not _isBareIf_check(nested):
        return None
    return Diagnostic(
        pattern=PatternKind.NESTED_IF,
        file=path,
        span=chain.span,
        message="if contains only another if; merge the conditions with 'and'",
    )


def detect_empty_if_body(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> list[Diagnostic]:
    """
    Branches whose body does nothing

    Fires once per if/elif branch with a no-op body; the message names the
    branch's line.

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        EMPTY_IF_BODY diagnostics, possibly empty.
    """
    found: list[Diagnostic] = []
    for branch in chain.branches:
        if not is_nonfunctional(branch.body):
            continue
        keyword = "elif" if branch.is_elif else "if"
        found.append(
            Diagnostic(
                pattern=PatternKind.EMPTY_IF_BODY,
                file=path,
                span=chain.span,
                message=(
                    f"{keyword} body on line {branch.span.line_start} contains no functional code"
                ),
            )
        )
    return found


def detect_empty_else_body(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    else block that does nothing

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        EMPTY_ELSE_BODY diagnostic or None.
    """
    if chain.else_body is None or not is_nonfunctional(chain.else_body):
        return None
    return Diagnostic(
        pattern=PatternKind.EMPTY_ELSE_BODY,
        file=path,
        span=chain.span,
        message="else body contains no functional code",
    )


def detect_unnecessary_elif(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    if/elif pair whose elif condition is the negation of the if condition

    Only two-branch chains without else qualify; in longer chains an else
    would swallow the later branches.

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        UNNECESSARY_ELIF diagnostic or None.
    """
    if len(chain.branches) != 2 or chain.else_body is not None:
        return None
    if not negates(chain.branches[0].cond, chain.branches[1].cond):
        return None
    return Diagnostic(
        pattern=PatternKind.UNNECESSARY_ELIF,
        file=path,
        span=chain.span,
        message="elif tests the inverse of the if condition; use else",
    )


def detect_duplication_family(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    Trailing statements repeated in both arms of an if/else

    Precedence, most specific first: identical bodies, one body being a
    trailing part of the other, several shared trailing statements, one
    shared trailing statement.

    Args:
        chain: Chain to inspect.
        next_stmt: Unused.
        path: Module path for the diagnostic.

    Returns:
        At most one diagnostic of the duplication family.
    """
    if not _isIfElse_check(chain):
        return None
    assert chain.else_body is not None
    if_body = chain.branches[0].body
    else_body = chain.else_body
    shared = common_suffix_len(if_body, else_body)
    if shared == 0:
        return None

    if shared == len(if_body) == len(else_body):
        pattern = PatternKind.DUPLICATE_IF_ELSE_BODY
        message = "if and else bodies are identical; the condition has no effect"
    elif shared == min(len(if_body), len(else_body)):
        pattern = PatternKind.UNNECESSARY_ELSE
        shorter = "else" if len(else_body) < len(if_body) else "if"
        message = (
            f"the whole {shorter} body repeats the end of the other branch; "
            "move the shared statements after the if statement"
        )
    elif shared >= 2:
        pattern = PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS
        message = (
            f"{shared} trailing statements are duplicated in if and else; "
            "move them after the if statement"
        )
    else:
        pattern = PatternKind.DUPLICATE_IF_ELSE_STATEMENT
        message = "the last statement is duplicated in if and else; move it after the if statement"
    return Diagnostic(pattern=pattern, file=path, span=chain.span, message=message)


def detect_assign_family(
    chain: IfChain, next_stmt: Optional[Stmt] = None, path: str = DEFAULT_PATH
) -> Optional[Diagnostic]:
    """
    if/else whose arms each assign the same name once

    Precedence: opposite boolean literals followed by a return of the name,
    opposite boolean literals alone, then any values followed by a return of
    the name.

    Args:
        chain: Chain to inspect.
        next_stmt: Statement following the chain in its block.
        path: Module path for the diagnostic.

    Returns:
        At most one diagnostic of the assignment family.
    """
    if not _isIfElse_check(chain):
        return None
    assert chain.else_body is not None
    if_body, else_body = chain.branches[0].body, chain.else_body
    if len(if_body) != 1 or len(else_body) != 1:
        return None
    first, second = if_body[0], else_body[0]
    if not (isinstance(first, AssignStmt) and isinstance(second, AssignStmt)):
        return None
    name = first.target_name
    if name is None or second.target_name != name:
        return None

    opposite_bools = (
        isinstance(first.value, BoolLit)
        and isinstance(second.value, BoolLit)
        and first.value.value != second.value.value
    )
    returns_name = _returnsName_check(next_stmt, name)

    if opposite_bools and returns_name:
        assert next_stmt is not None
        return Diagnostic(
            pattern=PatternKind.IF_ELSE_ASSIGN_BOOL_RETURN,
            file=path,
            span=chain.span.span_merge(next_stmt.span),
            message=f"'{name}' is assigned opposite boolean literals and returned; "
            "return the condition directly",
        )
    if opposite_bools:
        return Diagnostic(
            pattern=PatternKind.IF_ELSE_ASSIGN_BOOL,
            file=path,
            span=chain.span,
            message=(
                f"'{name}' is assigned opposite boolean literals; assign the condition directly"
            ),
        )
    if returns_name:
        assert next_stmt is not None
        return Diagnostic(
            pattern=PatternKind.IF_ELSE_ASSIGN_RETURN,
            file=path,
            span=chain.span.span_merge(next_stmt.span),
            message=f"'{name}' is assigned in both branches and immediately returned; "
            "return from each branch instead",
        )
    return None
