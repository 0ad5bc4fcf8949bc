"""
Mechanical rewrite suggestions for detected anti-patterns.

A suggestion's replacement text substitutes exactly the diagnostic span: its
first line starts at the column of the chain's `if` keyword and every further
line carries its full indentation. Lines outside the span are never touched.
"""

from __future__ import annotations

import ast
import difflib
import logging
from typing import Callable, Optional, Sequence

from condlint.common.settings import settings
from condlint.common.types import Diagnostic, PatternKind, RewriteSuggestion, Span
from condlint.detectors.helpers import common_suffix_len
from condlint.frontend.ir import (
    AssignStmt,
    BoolLit,
    Branch,
    CompareExpr,
    Expr,
    Fingerprint,
    IfChain,
    IfChainStmt,
    NameExpr,
    NotExpr,
    OpaqueExpr,
    ReturnStmt,
    Stmt,
)

__all__ = ["condition_isPure", "suggest_fix", "suggestion_apply", "patch_render"]

logger = logging.getLogger(__name__)

Position = tuple[int, int]  # (1-based line, 0-based character column)

# Expressions that need parentheses to stand alone after `return`, `=` or `if`
_STANDALONE_PAREN_KINDS: frozenset[str] = frozenset({"NamedExpr", "Yield", "YieldFrom", "Lambda"})

# Expressions that bind looser than `and`
_LOOSE_KINDS: frozenset[str] = frozenset(
    {"BoolOp", "IfExp", "Lambda", "NamedExpr", "Yield", "YieldFrom"}
)


def _operand_isPure(operand: Fingerprint) -> bool:
    text = operand.canon
    if text.isidentifier():
        return True
    try:
        ast.literal_eval(text)
    except (ValueError, TypeError, SyntaxError, RecursionError):
        return False
    return True


def condition_isPure(expr: Expr) -> bool:
    """
    Whether evaluating a condition can have no effect besides its value

    Args:
        expr: Condition expression.

    Returns:
        True for literals, names, and `not` or single comparisons over names
        and literals; False for anything that may call code.
    """
    if isinstance(expr, (BoolLit, NameExpr)):
        return True
    if isinstance(expr, NotExpr):
        return condition_isPure(expr.inner)
    if isinstance(expr, CompareExpr):
        return _operand_isPure(expr.lhs) and _operand_isPure(expr.rhs)
    return False


def _start_get(span: Span) -> Position:
    return (span.line_start, span.col_start - 1)


def _end_get(span: Span) -> Position:
    return (span.line_end, span.col_end)


class _Rewriter:
    """Renders replacement text from the source lines of one module"""

    def __init__(self, source: str) -> None:
        self._lines: list[str] = source.split("\n")
        self._unit: str = settings.DEFAULT_INDENT_UNIT

    # -------------------------------------------------------------------------
    # Source access
    # -------------------------------------------------------------------------

    def slice_get(self, start: Position, end: Position) -> str:
        (line_start, col_start), (line_end, col_end) = start, end
        if line_start == line_end:
            return self._lines[line_start - 1][col_start:col_end]
        parts = [self._lines[line_start - 1][col_start:]]
        parts.extend(self._lines[line_start : line_end - 1])
        parts.append(self._lines[line_end - 1][:col_end])
        return "\n".join(parts)

    def text_get(self, span: Span) -> str:
        return self.slice_get(_start_get(span), _end_get(span))

    def indent_get(self, line_no: int) -> str:
        line = self._lines[line_no - 1]
        return line[: len(line) - len(line.lstrip())]

    def blockIndent_get(self, body: Sequence[Stmt]) -> str:
        """
        Indentation of a block, or one level deeper than its header when inline

        Args:
            body: Non-empty statement block.

        Returns:
            Whitespace prefix for the block's statements.
        """
        first = body[0].span
        indent = self.indent_get(first.line_start)
        before = self._lines[first.line_start - 1][: first.col_start - 1]
        return indent if not before.strip() else indent + self._unit

    # -------------------------------------------------------------------------
    # Fragment rendering
    # -------------------------------------------------------------------------

    def fragment_render(self, span: Span, new_indent: str) -> list[str]:
        """
        Source lines of a span moved to a new indentation

        Args:
            span: Fragment to copy.
            new_indent: Indentation of the fragment's first line.

        Returns:
            Rendered lines; continuation lines keep their relative offset.
        """
        old_indent = self.indent_get(span.line_start)
        text_lines = self.text_get(span).split("\n")
        rendered = [new_indent + text_lines[0]]
        for line in text_lines[1:]:
            if line.strip() and line.startswith(old_indent):
                rendered.append(new_indent + line[len(old_indent) :])
            else:
                rendered.append(line)
        return rendered

    def block_render(self, body: Sequence[Stmt], new_indent: str) -> list[str]:
        rendered: list[str] = []
        for stmt in body:
            rendered.extend(self.fragment_render(stmt.span, new_indent))
        return rendered

    def exprText_get(
        self, expr: Expr, paren_kinds: frozenset[str] = _STANDALONE_PAREN_KINDS
    ) -> str:
        """
        Source text of an expression, parenthesized where its context needs it

        Args:
            expr: Expression node.
            paren_kinds: Opaque node kinds that must be wrapped.

        Returns:
            Expression text usable on a single logical line.
        """
        text = self.text_get(expr.span)
        if "\n" in text or (isinstance(expr, OpaqueExpr) and expr.node_kind in paren_kinds):
            return f"({text})"
        return text

    def negatedText_get(self, expr: Expr) -> str:
        """
        Source text of the negation of a condition

        Args:
            expr: Condition to negate.

        Returns:
            Flipped literal, unwrapped `not`, inverted comparison operator,
            `not name`, or `not (...)` for anything else.
        """
        if isinstance(expr, BoolLit):
            return "False" if expr.value else "True"
        if isinstance(expr, NotExpr):
            return self.exprText_get(expr.inner)
        if isinstance(expr, CompareExpr):
            text = (
                self.slice_get(_start_get(expr.span), _start_get(expr.op_span))
                + expr.op.inverse.value
                + self.slice_get(_end_get(expr.op_span), _end_get(expr.span))
            )
            return f"({text})" if "\n" in text else text
        if isinstance(expr, NameExpr):
            return f"not {expr.identifier}"
        return f"not ({self.text_get(expr.span)})"

    def truthText_get(self, cond: Expr, literal: BoolLit) -> str:
        """
        Value-context text of a condition or its negation

        Unwrapping `not` around an opaque operand would leak the operand's own
        value, so that case is spelled `bool(...)`.
        """
        if literal.value:
            return self.exprText_get(cond)
        if isinstance(cond, NotExpr) and isinstance(cond.inner, OpaqueExpr):
            return f"bool({self.text_get(cond.inner.span)})"
        return self.negatedText_get(cond)

    @staticmethod
    def lines_join(lines: Sequence[str], chain_indent: str) -> str:
        """
        Join rendered lines into replacement text starting at the chain column

        Args:
            lines: Fully indented lines.
            chain_indent: Indentation of the chain's first line.

        Returns:
            Replacement text.
        """
        text = "\n".join(lines)
        return text[len(chain_indent) :] if text.startswith(chain_indent) else text.lstrip()

    # -------------------------------------------------------------------------
    # Rewrites
    # -------------------------------------------------------------------------

    def returnBool_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        branch = chain.branches[0]
        stmt = branch.body[0]
        if not (isinstance(stmt, ReturnStmt) and isinstance(stmt.value, BoolLit)):
            return None
        return f"return {self.truthText_get(branch.cond, stmt.value)}"

    def assignBool_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        branch = chain.branches[0]
        stmt = branch.body[0]
        if not (isinstance(stmt, AssignStmt) and isinstance(stmt.value, BoolLit)):
            return None
        return f"{stmt.target_name} = {self.truthText_get(branch.cond, stmt.value)}"

    def assignBoolReturn_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        assigned = self.assignBool_rewrite(chain, next_stmt)
        if assigned is None:
            return None
        stmt = chain.branches[0].body[0]
        assert isinstance(stmt, AssignStmt)
        chain_indent = self.indent_get(chain.span.line_start)
        return f"{assigned}\n{chain_indent}return {stmt.target_name}"

    def assignReturn_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        branch = chain.branches[0]
        assert chain.else_body is not None
        first, second = branch.body[0], chain.else_body[0]
        if not (isinstance(first, AssignStmt) and isinstance(second, AssignStmt)):
            return None
        chain_indent = self.indent_get(chain.span.line_start)
        lines = self.fragment_render(branch.header_span, chain_indent)
        lines.append(f"{self.blockIndent_get(branch.body)}return {self.exprText_get(first.value)}")
        lines.append(f"{chain_indent}else:")
        lines.append(
            f"{self.blockIndent_get(chain.else_body)}return {self.exprText_get(second.value)}"
        )
        return self.lines_join(lines, chain_indent)

    def nestedIf_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        outer = chain.branches[0]
        inner_stmt = outer.body[0]
        if not isinstance(inner_stmt, IfChainStmt):
            return None
        inner = inner_stmt.chain.branches[0]
        chain_indent = self.indent_get(chain.span.line_start)
        first = self.exprText_get(outer.cond, _LOOSE_KINDS)
        second = self.exprText_get(inner.cond, _LOOSE_KINDS)
        lines = [f"{chain_indent}if {first} and {second}:"]
        lines.extend(self.block_render(inner.body, self.blockIndent_get(outer.body)))
        return self.lines_join(lines, chain_indent)

    def duplication_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        """
        Hoist the statements shared at the end of both arms below the chain

        When only the else keeps statements of its own, the condition is
        negated and the else body becomes the if body.
        """
        branch = chain.branches[0]
        assert chain.else_body is not None
        if_body, else_body = branch.body, chain.else_body
        shared_count = common_suffix_len(if_body, else_body)
        if shared_count == 0:
            return None
        shared = if_body[len(if_body) - shared_count :]
        if_rest = if_body[: len(if_body) - shared_count]
        else_rest = else_body[: len(else_body) - shared_count]
        chain_indent = self.indent_get(chain.span.line_start)

        lines: list[str] = []
        if not if_rest and not else_rest:
            if not condition_isPure(branch.cond):
                # Keep the condition's evaluation for its side effects
                lines.append(chain_indent + self.exprText_get(branch.cond))
        elif not else_rest:
            lines.extend(self.fragment_render(branch.header_span, chain_indent))
            lines.extend(self.block_render(if_rest, self.blockIndent_get(if_body)))
        elif not if_rest:
            lines.append(f"{chain_indent}if {self.negatedText_get(branch.cond)}:")
            lines.extend(self.block_render(else_rest, self.blockIndent_get(else_body)))
        else:
            lines.extend(self.fragment_render(branch.header_span, chain_indent))
            lines.extend(self.block_render(if_rest, self.blockIndent_get(if_body)))
            lines.append(f"{chain_indent}else:")
            lines.extend(self.block_render(else_rest, self.blockIndent_get(else_body)))
        lines.extend(self.block_render(shared, chain_indent))
        return self.lines_join(lines, chain_indent)

    def elseFlatten_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        """
        Turn an else holding only an if chain into elif arms of the outer chain
        """
        if chain.else_body is None or len(chain.else_body) != 1:
            return None
        nested_stmt = chain.else_body[0]
        if not isinstance(nested_stmt, IfChainStmt):
            return None
        chain_indent = self.indent_get(chain.span.line_start)
        kept = self.slice_get(_start_get(chain.span), _end_get(chain.branches[-1].span))
        lines = (chain_indent + kept).split("\n")
        body_indent = self.blockIndent_get(chain.branches[-1].body)
        lines.extend(self._chainFlatten_render(nested_stmt.chain, chain_indent, body_indent))
        return self.lines_join(lines, chain_indent)

    def _chainFlatten_render(
        self, nested: IfChain, chain_indent: str, body_indent: str
    ) -> list[str]:
        lines: list[str] = []
        for branch in nested.branches:
            header = self.fragment_render(branch.header_span, chain_indent)
            if not branch.is_elif:
                header[0] = f"{chain_indent}el{header[0][len(chain_indent):]}"
            lines.extend(header)
            lines.extend(self.block_render(branch.body, body_indent))
        if nested.else_body is not None:
            inner = nested.else_body[0] if len(nested.else_body) == 1 else None
            if isinstance(inner, IfChainStmt):
                lines.extend(self._chainFlatten_render(inner.chain, chain_indent, body_indent))
            else:
                lines.append(f"{chain_indent}else:")
                lines.extend(self.block_render(nested.else_body, body_indent))
        return lines

    def unnecessaryElif_rewrite(self, chain: IfChain, next_stmt: Optional[Stmt]) -> Optional[str]:
        second: Branch = chain.branches[1]
        before = self.slice_get(_start_get(chain.span), _start_get(second.header_span))
        after = self.slice_get(_end_get(second.header_span), _end_get(chain.span))
        return f"{before}else:{after}"


_Rewrite = Callable[[_Rewriter, IfChain, Optional[Stmt]], Optional[str]]

_REWRITES: dict[PatternKind, tuple[_Rewrite, str]] = {
    PatternKind.IF_ELSE_RETURN_BOOL: (
        _Rewriter.returnBool_rewrite,
        "return the condition instead of branching to boolean literals",
    ),
    PatternKind.IF_RETURN_BOOL: (
        _Rewriter.returnBool_rewrite,
        "return the condition instead of branching to boolean literals",
    ),
    PatternKind.IF_ELSE_ASSIGN_BOOL: (
        _Rewriter.assignBool_rewrite,
        "assign the condition instead of branching to boolean literals",
    ),
    PatternKind.IF_ELSE_ASSIGN_BOOL_RETURN: (
        _Rewriter.assignBoolReturn_rewrite,
        "assign the condition instead of branching to boolean literals",
    ),
    PatternKind.IF_ELSE_ASSIGN_RETURN: (
        _Rewriter.assignReturn_rewrite,
        "return each value from its own branch",
    ),
    PatternKind.NESTED_IF: (
        _Rewriter.nestedIf_rewrite,
        "merge the nested conditions with 'and'",
    ),
    PatternKind.DUPLICATE_IF_ELSE_BODY: (
        _Rewriter.duplication_rewrite,
        "both branches do the same thing; keep one copy without the if",
    ),
    PatternKind.UNNECESSARY_ELSE: (
        _Rewriter.duplication_rewrite,
        "move the repeated statements after the if and drop the else",
    ),
    PatternKind.SEVERAL_DUPLICATE_IF_ELSE_STATEMENTS: (
        _Rewriter.duplication_rewrite,
        "move the repeated trailing statements after the if/else",
    ),
    PatternKind.DUPLICATE_IF_ELSE_STATEMENT: (
        _Rewriter.duplication_rewrite,
        "move the repeated trailing statement after the if/else",
    ),
    PatternKind.ELSE_IF: (
        _Rewriter.elseFlatten_rewrite,
        "replace 'else: if' with elif",
    ),
    PatternKind.CONFUSING_ELSE: (
        _Rewriter.elseFlatten_rewrite,
        "flatten the nested if/else into elif branches",
    ),
    PatternKind.UNNECESSARY_ELIF: (
        _Rewriter.unnecessaryElif_rewrite,
        "the elif condition is the inverse of the if condition; use else",
    ),
}

_HINTS: dict[PatternKind, str] = {
    PatternKind.EMPTY_IF_BODY: (
        "the branch does nothing; remove it or invert the condition so the work "
        "happens in the if"
    ),
    PatternKind.EMPTY_ELSE_BODY: "the else does nothing; remove it",
}


def suggest_fix(
    diagnostic: Diagnostic, chain: IfChain, next_stmt: Optional[Stmt], source: str
) -> Optional[RewriteSuggestion]:
    """
    Build a rewrite for a diagnostic

    Args:
        diagnostic: Diagnostic produced for `chain`.
        chain: The chain the diagnostic was raised on.
        next_stmt: Statement following the chain in its block.
        source: Text of the module the chain was parsed from.

    Returns:
        A replacement for the diagnostic span, a hint-only suggestion for the
        empty-body patterns, or None when no rewrite applies.
    """
    hint = _HINTS.get(diagnostic.pattern)
    if hint is not None:
        return RewriteSuggestion(replacement_text=None, rationale=hint)
    entry = _REWRITES.get(diagnostic.pattern)
    if entry is None or not source:
        return None
    rewrite, rationale = entry
    replacement = rewrite(_Rewriter(source), chain, next_stmt)
    if replacement is None:
        logger.debug(
            "%s:%d: no rewrite for %s",
            diagnostic.file,
            diagnostic.span.line_start,
            diagnostic.pattern.identifier,
        )
        return None
    return RewriteSuggestion(replacement_text=replacement, rationale=rationale)


def _offset_get(lines: Sequence[str], position: Position) -> int:
    line, col = position
    return sum(len(text) + 1 for text in lines[: line - 1]) + col


def suggestion_apply(source: str, diagnostic: Diagnostic) -> str:
    """
    Splice a diagnostic's replacement over its span

    Args:
        source: Module text the diagnostic was computed on.
        diagnostic: Diagnostic carrying a suggestion.

    Returns:
        Rewritten text; `source` unchanged when there is no replacement.
    """
    suggestion = diagnostic.suggestion
    if suggestion is None or suggestion.replacement_text is None:
        return source
    lines = source.split("\n")
    start = _offset_get(lines, _start_get(diagnostic.span))
    end = _offset_get(lines, _end_get(diagnostic.span))
    return source[:start] + suggestion.replacement_text + source[end:]


def patch_render(path: str, source: str, diagnostics: Sequence[Diagnostic]) -> str:
    """
    Unified diff applying every non-overlapping suggestion of one file

    Suggestions are taken in span order; one whose span overlaps an
    already accepted span is skipped.

    Args:
        path: File path for the diff header.
        source: Module text.
        diagnostics: Diagnostics of that file.

    Returns:
        Diff text, empty when nothing is rewritable.
    """
    accepted: list[Diagnostic] = []
    for diagnostic in sorted(diagnostics, key=Diagnostic.sortKey_get):
        suggestion = diagnostic.suggestion
        if suggestion is None or suggestion.replacement_text is None:
            continue
        if accepted and _start_get(diagnostic.span) < _end_get(accepted[-1].span):
            continue
        accepted.append(diagnostic)
    if not accepted:
        return ""

    rewritten = source
    for diagnostic in reversed(accepted):
        rewritten = suggestion_apply(rewritten, diagnostic)
    diff = difflib.unified_diff(
        source.splitlines(),
        rewritten.splitlines(),
        fromfile=f"a/{path}",
        tofile=f"b/{path}",
        lineterm="",
    )
    text = "\n".join(diff)
    return f"{text}\n" if text else ""
