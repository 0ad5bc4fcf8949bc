"""
Python source to conditional IR.

Statement structure comes from the standard `ast` module; exact character
spans, fingerprints and elif-versus-else provenance come from the `tokenize`
stream of the same text. `elif` is recognised by the keyword token at the
start of the nested `if` node, never by column heuristics.
"""

from __future__ import annotations

import ast
import io
import logging
import tokenize
from bisect import bisect_left
from pathlib import Path
from typing import Optional, Sequence, Union

from condlint.common.types import ParseError, Span
from condlint.frontend.fingerprint import fingerprint
from condlint.frontend.ir import (
    AssignStmt,
    AugAssignStmt,
    BoolLit,
    Branch,
    CompareExpr,
    CompareOp,
    Expr,
    Fingerprint,
    IfChain,
    IfChainStmt,
    NameExpr,
    NotExpr,
    OpaqueCompoundStmt,
    OpaqueExpr,
    OpaqueSimpleStmt,
    ParsedModule,
    PassStmt,
    ReturnStmt,
    Stmt,
)

__all__ = ["parse_module", "moduleFromFile_parse", "count_lloc"]

logger = logging.getLogger(__name__)

Position = tuple[int, int]  # (1-based row, 0-based character column), as tokenize reports

_LAYOUT_TYPES: frozenset[int] = frozenset(
    {
        tokenize.COMMENT,
        tokenize.NL,
        tokenize.NEWLINE,
        tokenize.INDENT,
        tokenize.DEDENT,
        tokenize.ENDMARKER,
        tokenize.ENCODING,
    }
)

_COMPARE_OPS: dict[type, CompareOp] = {
    ast.Eq: CompareOp.EQ,
    ast.NotEq: CompareOp.NE,
    ast.Lt: CompareOp.LT,
    ast.LtE: CompareOp.LE,
    ast.Gt: CompareOp.GT,
    ast.GtE: CompareOp.GE,
    ast.Is: CompareOp.IS,
    ast.IsNot: CompareOp.IS_NOT,
    ast.In: CompareOp.IN,
    ast.NotIn: CompareOp.NOT_IN,
}

_AUG_OPS: dict[type, str] = {
    ast.Add: "+=",
    ast.Sub: "-=",
    ast.Mult: "*=",
    ast.MatMult: "@=",
    ast.Div: "/=",
    ast.FloorDiv: "//=",
    ast.Mod: "%=",
    ast.Pow: "**=",
    ast.LShift: "<<=",
    ast.RShift: ">>=",
    ast.BitOr: "|=",
    ast.BitXor: "^=",
    ast.BitAnd: "&=",
}

_TRY_TYPES: tuple[type, ...] = tuple(
    node_type
    for node_type in (getattr(ast, "Try", None), getattr(ast, "TryStar", None))
    if node_type
)
_MATCH_TYPE: Optional[type] = getattr(ast, "Match", None)


class _SourceIndex:
    """Token table of one module with position and span helpers"""

    def __init__(self, source: str, tokens: Sequence[tokenize.TokenInfo]) -> None:
        self._lines: list[str] = source.split("\n")
        self._tokens: list[tokenize.TokenInfo] = [
            tok for tok in tokens if tok.type != tokenize.ENDMARKER
        ]
        self._starts: list[Position] = [tok.start for tok in self._tokens]

    def column_toChars(self, lineno: int, byte_col: int) -> int:
        """
        Convert an AST UTF-8 byte column into a character column

        Args:
            lineno: 1-based line number.
            byte_col: 0-based byte offset in that line.

        Returns:
            0-based character offset.
        """
        line = self._lines[lineno - 1] if 0 < lineno <= len(self._lines) else ""
        if line.isascii():
            return byte_col
        return len(line.encode("utf-8")[:byte_col].decode("utf-8", errors="replace"))

    def bounds_get(self, node: ast.AST) -> tuple[Position, Position]:
        """
        Character bounds of an AST node

        Args:
            node: Node with location attributes.

        Returns:
            Start and end positions (end exclusive).
        """
        start_line: int = node.lineno  # type: ignore[attr-defined]
        end_line: int = node.end_lineno  # type: ignore[attr-defined]
        start_col: int = node.col_offset  # type: ignore[attr-defined]
        end_col: int = node.end_col_offset  # type: ignore[attr-defined]
        start = (start_line, self.column_toChars(start_line, start_col))
        end = (end_line, self.column_toChars(end_line, end_col))
        return start, end

    def stmtBounds_get(self, node: ast.stmt) -> tuple[Position, Position]:
        """
        Statement bounds, widened to the first decorator's `@`

        Args:
            node: Statement node.

        Returns:
            Start and end positions.
        """
        start, end = self.bounds_get(node)
        decorators: list[ast.expr] = getattr(node, "decorator_list", [])
        if decorators:
            decorator_start, _ = self.bounds_get(decorators[0])
            at_token = self.tokenBefore_find(decorator_start, "@")
            start = at_token.start if at_token is not None else decorator_start
        return start, end

    @staticmethod
    def span_make(start: Position, end: Position) -> Span:
        """
        Convert tokenize-style bounds into a 1-based inclusive Span

        Args:
            start: Inclusive start position.
            end: Exclusive end position.

        Returns:
            Span.
        """
        col_end = max(end[1], 1)
        if end[0] == start[0]:
            col_end = max(col_end, start[1] + 1)
        return Span(start[0], start[1] + 1, end[0], col_end)

    def tokens_between(self, start: Position, end: Position) -> list[tokenize.TokenInfo]:
        """
        Tokens lying entirely within [start, end)

        Args:
            start: Inclusive start position.
            end: Exclusive end position.

        Returns:
            Tokens in source order.
        """
        index = bisect_left(self._starts, start)
        found: list[tokenize.TokenInfo] = []
        while index < len(self._tokens) and self._tokens[index].start < end:
            tok = self._tokens[index]
            if tok.end <= end:
                found.append(tok)
            index += 1
        return found

    def tokenAt_get(self, position: Position) -> Optional[tokenize.TokenInfo]:
        """
        Token starting exactly at a position

        Args:
            position: Start position.

        Returns:
            Matching significant token or None.
        """
        index = bisect_left(self._starts, position)
        while index < len(self._tokens) and self._tokens[index].start == position:
            tok = self._tokens[index]
            if tok.type not in _LAYOUT_TYPES:
                return tok
            index += 1
        return None

    def tokenBefore_find(self, position: Position, text: str) -> Optional[tokenize.TokenInfo]:
        """
        Significant token immediately before a position, if it has the given text

        Args:
            position: Exclusive upper bound.
            text: Token string to look for.

        Returns:
            Token or None.
        """
        index = bisect_left(self._starts, position) - 1
        while index >= 0:
            tok = self._tokens[index]
            if tok.type not in _LAYOUT_TYPES:
                return tok if tok.string == text else None
            index -= 1
        return None

    def tokenAfter_find(self, position: Position, text: str) -> Optional[tokenize.TokenInfo]:
        """
        First token with the given text starting at or after a position

        Args:
            position: Inclusive lower bound.
            text: Token string to look for.

        Returns:
            Token or None.
        """
        index = bisect_left(self._starts, position)
        while index < len(self._tokens):
            tok = self._tokens[index]
            if tok.string == text and tok.type in (tokenize.OP, tokenize.NAME):
                return tok
            index += 1
        return None

    def fingerprint_get(self, start: Position, end: Position) -> Fingerprint:
        return fingerprint(self.tokens_between(start, end))


class _IRBuilder:
    """Converts AST statements and expressions into IR nodes"""

    def __init__(self, index: _SourceIndex) -> None:
        self._index = index

    def block_build(self, nodes: Sequence[ast.stmt]) -> tuple[Stmt, ...]:
        return tuple(self.stmt_build(node) for node in nodes)

    def stmt_build(self, node: ast.stmt) -> Stmt:
        """
        Convert one statement

        Args:
            node: AST statement.

        Returns:
            IR statement.
        """
        if isinstance(node, ast.If):
            chain = self.chain_build(node)
            return IfChainStmt(chain=chain, span=chain.span)

        start, end = self._index.stmtBounds_get(node)
        span = _SourceIndex.span_make(start, end)
        fp = self._index.fingerprint_get(start, end)

        if isinstance(node, ast.Return):
            value = self.expr_build(node.value) if node.value is not None else None
            return ReturnStmt(value=value, span=span, fp=fp)
        if isinstance(node, ast.Assign) and len(node.targets) == 1:
            target = node.targets[0]
            return AssignStmt(
                target_name=target.id if isinstance(target, ast.Name) else None,
                target_fp=self._index.fingerprint_get(*self._index.bounds_get(target)),
                value=self.expr_build(node.value),
                span=span,
                fp=fp,
            )
        if isinstance(node, ast.AugAssign):
            return AugAssignStmt(
                target_fp=self._index.fingerprint_get(*self._index.bounds_get(node.target)),
                op=_AUG_OPS.get(type(node.op), "?="),
                value_fp=self._index.fingerprint_get(*self._index.bounds_get(node.value)),
                span=span,
                fp=fp,
            )
        if isinstance(node, ast.Pass):
            return PassStmt(span=span, fp=fp)

        bodies = _compoundBodies_get(node)
        if bodies is None:
            return OpaqueSimpleStmt(fp=fp, span=span)
        return OpaqueCompoundStmt(
            header_fp=self._headerFingerprint_get(start, end, bodies),
            bodies=tuple(self.block_build(body) for body in bodies),
            span=span,
        )

    def _headerFingerprint_get(
        self, start: Position, end: Position, bodies: Sequence[Sequence[ast.stmt]]
    ) -> Fingerprint:
        """
        Fingerprint of a compound statement without its nested blocks

        Args:
            start: Statement start.
            end: Statement end.
            bodies: Nested statement blocks.

        Returns:
            Fingerprint of clause keywords, targets, conditions and handlers.
        """
        excluded: list[tuple[Position, Position]] = []
        for body in bodies:
            body_start, _ = self._index.stmtBounds_get(body[0])
            _, body_end = self._index.stmtBounds_get(body[-1])
            excluded.append((body_start, body_end))
        tokens = [
            tok
            for tok in self._index.tokens_between(start, end)
            if not any(lo <= tok.start < hi for lo, hi in excluded)
        ]
        return fingerprint(tokens)

    def chain_build(self, node: ast.If) -> IfChain:
        """
        Convert an if statement and its elif arms into one chain

        Args:
            node: Outermost `if` node.

        Returns:
            IfChain with provenance-accurate branches.
        """
        branches: list[Branch] = []
        current: ast.If = node
        is_elif = False
        while True:
            keyword_start, _ = self._index.bounds_get(current)
            cond = self.expr_build(current.test)
            _, cond_end = self._index.bounds_get(current.test)
            colon = self._index.tokenAfter_find(cond_end, ":")
            header_end: Position = colon.end if colon is not None else cond_end
            _, body_end = self._index.stmtBounds_get(current.body[-1])
            branches.append(
                Branch(
                    cond=cond,
                    body=self.block_build(current.body),
                    span=_SourceIndex.span_make(keyword_start, body_end),
                    header_span=_SourceIndex.span_make(keyword_start, header_end),
                    is_elif=is_elif,
                )
            )
            orelse = current.orelse
            if len(orelse) == 1 and isinstance(orelse[0], ast.If) and self._elif_check(orelse[0]):
                current = orelse[0]
                is_elif = True
                continue
            break

        else_body: Optional[tuple[Stmt, ...]] = None
        else_span: Optional[Span] = None
        if current.orelse:
            _, last_body_end = self._index.stmtBounds_get(current.body[-1])
            else_first_start, _ = self._index.stmtBounds_get(current.orelse[0])
            _, else_end = self._index.stmtBounds_get(current.orelse[-1])
            else_token = next(
                (
                    tok
                    for tok in self._index.tokens_between(last_body_end, else_first_start)
                    if tok.type == tokenize.NAME and tok.string == "else"
                ),
                None,
            )
            else_start: Position = else_token.start if else_token is not None else else_first_start
            else_body = self.block_build(current.orelse)
            else_span = _SourceIndex.span_make(else_start, else_end)

        chain_start, chain_end = self._index.bounds_get(node)
        return IfChain(
            branches=tuple(branches),
            else_body=else_body,
            else_span=else_span,
            span=_SourceIndex.span_make(chain_start, chain_end),
        )

    def _elif_check(self, node: ast.If) -> bool:
        """
        Whether a nested `if` in an orelse was written with the elif keyword

        Args:
            node: The single `if` inside an orelse.

        Returns:
            True for `elif`, False for `else:` followed by `if`.
        """
        start, _ = self._index.bounds_get(node)
        tok = self._index.tokenAt_get(start)
        if tok is not None and tok.type == tokenize.NAME:
            return tok.string == "elif"
        # Locations that do not point at the keyword: look along the line
        line_tokens = self._index.tokens_between((start[0], 0), start)
        return any(t.type == tokenize.NAME and t.string == "elif" for t in line_tokens)

    def expr_build(self, node: ast.expr) -> Expr:
        """
        Convert an expression shallowly

        Args:
            node: AST expression.

        Returns:
            Structured node for bool literals, names, `not` and single
            comparisons; OpaqueExpr otherwise.
        """
        start, end = self._index.bounds_get(node)
        span = _SourceIndex.span_make(start, end)
        fp = self._index.fingerprint_get(start, end)

        if isinstance(node, ast.Constant) and isinstance(node.value, bool):
            return BoolLit(value=node.value, span=span, fp=fp)
        if isinstance(node, ast.Name):
            return NameExpr(identifier=node.id, span=span, fp=fp)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            return NotExpr(inner=self.expr_build(node.operand), span=span, fp=fp)
        if isinstance(node, ast.Compare) and len(node.ops) == 1:
            lhs_bounds = self._index.bounds_get(node.left)
            rhs_bounds = self._index.bounds_get(node.comparators[0])
            op_tokens = [
                tok
                for tok in self._index.tokens_between(lhs_bounds[1], rhs_bounds[0])
                if tok.type not in _LAYOUT_TYPES and tok.string not in ("(", ")")
            ]
            op_span = (
                _SourceIndex.span_make(op_tokens[0].start, op_tokens[-1].end)
                if op_tokens
                else _SourceIndex.span_make(lhs_bounds[1], rhs_bounds[0])
            )
            return CompareExpr(
                lhs=self._index.fingerprint_get(*lhs_bounds),
                op=_COMPARE_OPS[type(node.ops[0])],
                rhs=self._index.fingerprint_get(*rhs_bounds),
                op_span=op_span,
                span=span,
                fp=fp,
            )
        return OpaqueExpr(node_kind=type(node).__name__, span=span, fp=fp)


def _compoundBodies_get(node: ast.stmt) -> Optional[list[list[ast.stmt]]]:
    """
    Nested statement blocks of a non-if compound statement

    Args:
        node: AST statement.

    Returns:
        Non-empty blocks in source order, or None for simple statements.
    """
    bodies: list[list[ast.stmt]]
    if isinstance(node, (ast.For, ast.AsyncFor, ast.While)):
        bodies = [node.body, node.orelse]
    elif isinstance(
        node, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef, ast.With, ast.AsyncWith)
    ):
        bodies = [node.body]
    elif _TRY_TYPES and isinstance(node, _TRY_TYPES):
        bodies = [
            node.body,  # type: ignore[attr-defined]
            *[handler.body for handler in node.handlers],  # type: ignore[attr-defined]
            node.orelse,  # type: ignore[attr-defined]
            node.finalbody,  # type: ignore[attr-defined]
        ]
    elif _MATCH_TYPE is not None and isinstance(node, _MATCH_TYPE):
        bodies = [case.body for case in node.cases]  # type: ignore[attr-defined]
    else:
        return None
    return [body for body in bodies if body]


def _errorSpan_get(lines: list[str], lineno: Optional[int], offset: Optional[int]) -> Span:
    """
    Clamp an error location into the file's extent

    Args:
        lines: Source lines.
        lineno: Reported 1-based line, if any.
        offset: Reported 1-based column, if any.

    Returns:
        Single-position span.
    """
    line = min(max(lineno or 1, 1), max(len(lines), 1))
    text = lines[line - 1] if lines else ""
    col = min(max(offset or 1, 1), max(len(text), 1))
    return Span(line, col, line, col)


def _invalidModule_make(path: str, source: str, errors: list[ParseError]) -> ParsedModule:
    for error in errors:
        logger.info(
            "%s:%d:%d: %s", path, error.span.line_start, error.span.col_start, error.message
        )
    return ParsedModule(
        path=path, body=(), lloc=count_lloc(source), parse_errors=tuple(errors), source=source
    )


def _mixedIndentation_find(tokens: Sequence[tokenize.TokenInfo]) -> Optional[tokenize.TokenInfo]:
    """
    First INDENT token whose whitespace style differs from the file's first one

    Args:
        tokens: Module tokens.

    Returns:
        Offending INDENT token, or None when tabs and spaces are not mixed.
    """
    style: Optional[frozenset[str]] = None
    for tok in tokens:
        if tok.type != tokenize.INDENT:
            continue
        chars = frozenset(ch for ch in tok.string if ch in " \t")
        if len(chars) > 1:
            return tok
        if style is None:
            style = chars
        elif chars and chars != style:
            return tok
    return None


def parse_module(source: Union[str, bytes], path: str = "<string>") -> ParsedModule:
    """
    Parse Python source text into conditional IR

    Invalid input never raises: undecodable bytes, syntax errors and mixed
    tab/space indentation are recorded in `parse_errors` and the module body
    is left empty.

    Args:
        source: UTF-8 bytes or already-decoded text.
        path: Path used in diagnostics.

    Returns:
        ParsedModule covering every statement.
    """
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            message = f"not valid UTF-8: {exc.reason} at byte {exc.start}"
            return _invalidModule_make(path, "", [ParseError(Span(1, 1, 1, 1), message)])
    else:
        text = source[1:] if source.startswith("\ufeff") else source
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = text.split("\n")

    try:
        tree = ast.parse(text, filename=path)
    except SyntaxError as exc:
        span = _errorSpan_get(lines, exc.lineno, exc.offset)
        message = f"{type(exc).__name__}: {exc.msg}"
        return _invalidModule_make(path, text, [ParseError(span, message)])
    except (ValueError, RecursionError, MemoryError) as exc:
        message = f"{type(exc).__name__}: {exc}"
        return _invalidModule_make(path, text, [ParseError(Span(1, 1, 1, 1), message)])

    try:
        tokens = list(tokenize.generate_tokens(io.StringIO(text).readline))
    except (tokenize.TokenError, SyntaxError) as exc:
        return _invalidModule_make(
            path, text, [ParseError(Span(1, 1, 1, 1), f"tokenize failed: {exc}")]
        )

    mixed = _mixedIndentation_find(tokens)
    if mixed is not None:
        span = _errorSpan_get(lines, mixed.start[0], 1)
        message = "TabError: inconsistent use of tabs and spaces in indentation"
        return _invalidModule_make(path, text, [ParseError(span, message)])

    builder = _IRBuilder(_SourceIndex(text, tokens))
    return ParsedModule(
        path=path,
        body=builder.block_build(tree.body),
        lloc=_lloc_fromTokens(tokens),
        parse_errors=(),
        source=text,
    )


def moduleFromFile_parse(file_path: Union[str, Path]) -> ParsedModule:
    """
    Read a file as bytes and parse it

    Args:
        file_path: File to read.

    Returns:
        ParsedModule for the file.

    Raises:
        OSError: If the file cannot be read.
    """
    path = Path(file_path)
    return parse_module(path.read_bytes(), str(file_path))


def _lloc_fromTokens(tokens: Sequence[tokenize.TokenInfo]) -> int:
    rows: set[int] = set()
    for tok in tokens:
        if tok.type in _LAYOUT_TYPES:
            continue
        rows.update(range(tok.start[0], tok.end[0] + 1))
    return len(rows)


def count_lloc(source: str) -> int:
    """
    Count physical lines holding at least one non-comment token

    Args:
        source: Module text.

    Returns:
        Logical line count; blank and comment-only lines are excluded.
    """
    try:
        tokens = list(tokenize.generate_tokens(io.StringIO(source).readline))
    except (tokenize.TokenError, SyntaxError):
        return sum(
            1
            for line in source.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        )
    return _lloc_fromTokens(tokens)
