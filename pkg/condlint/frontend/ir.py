"""
Conditional-focused intermediate representation.

Statements and expressions are reduced to the handful of shapes the
anti-pattern rules inspect; everything else is kept as an opaque node with a
token fingerprint so duplicate detection and recursion still work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

from condlint.common.types import ParseError, Span

__all__ = [
    "Fingerprint",
    "CompareOp",
    "BoolLit",
    "NameExpr",
    "NotExpr",
    "CompareExpr",
    "OpaqueExpr",
    "Expr",
    "Branch",
    "IfChain",
    "IfChainStmt",
    "ReturnStmt",
    "AssignStmt",
    "AugAssignStmt",
    "PassStmt",
    "OpaqueSimpleStmt",
    "OpaqueCompoundStmt",
    "Stmt",
    "ParsedModule",
    "ChainSite",
    "chains_walk",
]


@dataclass(frozen=True)
class Fingerprint:
    """Normalized token sequence of a source fragment"""

    canon: str

    def __str__(self) -> str:
        return self.canon


class CompareOp(Enum):
    """Single comparison operators"""

    EQ = "=="
    NE = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="
    IS = "is"
    IS_NOT = "is not"
    IN = "in"
    NOT_IN = "not in"

    @property
    def inverse(self) -> CompareOp:
        """
        Operator whose result is always the complement of this one

        Returns:
            Inverse operator.
        """
        return _INVERSE_OPS[self]


_INVERSE_OPS: dict[CompareOp, CompareOp] = {
    CompareOp.EQ: CompareOp.NE,
    CompareOp.NE: CompareOp.EQ,
    CompareOp.LT: CompareOp.GE,
    CompareOp.GE: CompareOp.LT,
    CompareOp.GT: CompareOp.LE,
    CompareOp.LE: CompareOp.GT,
    CompareOp.IS: CompareOp.IS_NOT,
    CompareOp.IS_NOT: CompareOp.IS,
    CompareOp.IN: CompareOp.NOT_IN,
    CompareOp.NOT_IN: CompareOp.IN,
}


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoolLit:
    """The literal True or False"""

    value: bool
    span: Span
    fp: Fingerprint


@dataclass(frozen=True)
class NameExpr:
    """A bare identifier"""

    identifier: str
    span: Span
    fp: Fingerprint


@dataclass(frozen=True)
class NotExpr:
    """Keyword `not` applied to an operand, including the `not(x)` spelling"""

    inner: Expr
    span: Span
    fp: Fingerprint


@dataclass(frozen=True)
class CompareExpr:
    """A single, unchained comparison"""

    lhs: Fingerprint
    op: CompareOp
    rhs: Fingerprint
    op_span: Span
    span: Span
    fp: Fingerprint


@dataclass(frozen=True)
class OpaqueExpr:
    """Any other expression; `node_kind` is the Python AST class name"""

    node_kind: str
    span: Span
    fp: Fingerprint


Expr = Union[BoolLit, NameExpr, NotExpr, CompareExpr, OpaqueExpr]


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------


def _block_structural(body: tuple[Stmt, ...]) -> str:
    return "{ " + " ; ".join(stmt.structural for stmt in body) + " }"


@dataclass(frozen=True)
class Branch:
    """One `if` or `elif` arm of a chain"""

    cond: Expr
    body: tuple[Stmt, ...]
    span: Span  # keyword through end of body
    header_span: Span  # keyword through the colon
    is_elif: bool


@dataclass(frozen=True)
class IfChain:
    """An if statement with its elif arms and optional else block

    A source-level `else:` holding a nested `if` stays in `else_body`; only
    arms written with the `elif` keyword become additional branches.
    """

    branches: tuple[Branch, ...]
    else_body: Optional[tuple[Stmt, ...]]
    else_span: Optional[Span]  # else keyword through end of else block
    span: Span

    def __post_init__(self) -> None:
        """
        Enforce branch provenance invariants

        Raises:
            ValueError: On an empty chain or misplaced elif flags.
        """
        if not self.branches:
            raise ValueError("IfChain needs at least one branch")
        if self.branches[0].is_elif:
            raise ValueError("first branch of an IfChain cannot be an elif")
        if not all(branch.is_elif for branch in self.branches[1:]):
            raise ValueError("every branch after the first must be an elif")

    @property
    def has_else(self) -> bool:
        return self.else_body is not None

    @property
    def structural(self) -> str:
        """
        Deterministic fingerprint of the whole chain

        Returns:
            Canonical text.
        """
        parts: list[str] = []
        for branch in self.branches:
            keyword = "elif" if branch.is_elif else "if"
            parts.append(f"{keyword} {branch.cond.fp.canon} : {_block_structural(branch.body)}")
        if self.else_body is not None:
            parts.append(f"else : {_block_structural(self.else_body)}")
        return " ".join(parts)


@dataclass(frozen=True)
class IfChainStmt:
    chain: IfChain
    span: Span

    @property
    def structural(self) -> str:
        return self.chain.structural


@dataclass(frozen=True)
class ReturnStmt:
    value: Optional[Expr]
    span: Span
    fp: Fingerprint

    @property
    def structural(self) -> str:
        return self.fp.canon


@dataclass(frozen=True)
class AssignStmt:
    """Single-target assignment; `target_name` is set when the target is a bare name"""

    target_name: Optional[str]
    target_fp: Fingerprint
    value: Expr
    span: Span
    fp: Fingerprint

    @property
    def structural(self) -> str:
        return self.fp.canon


@dataclass(frozen=True)
class AugAssignStmt:
    target_fp: Fingerprint
    op: str
    value_fp: Fingerprint
    span: Span
    fp: Fingerprint

    @property
    def structural(self) -> str:
        return self.fp.canon


@dataclass(frozen=True)
class PassStmt:
    span: Span
    fp: Fingerprint

    @property
    def structural(self) -> str:
        return self.fp.canon


@dataclass(frozen=True)
class OpaqueSimpleStmt:
    fp: Fingerprint
    span: Span

    @property
    def structural(self) -> str:
        return self.fp.canon


@dataclass(frozen=True)
class OpaqueCompoundStmt:
    """for/while/def/class/try/with/match: header tokens plus every nested block"""

    header_fp: Fingerprint
    bodies: tuple[tuple[Stmt, ...], ...]
    span: Span

    @property
    def structural(self) -> str:
        blocks = " ".join(_block_structural(body) for body in self.bodies)
        return f"{self.header_fp.canon} {blocks}"


Stmt = Union[
    IfChainStmt,
    ReturnStmt,
    AssignStmt,
    AugAssignStmt,
    PassStmt,
    OpaqueSimpleStmt,
    OpaqueCompoundStmt,
]


@dataclass(frozen=True)
class ParsedModule:
    """IR of one source file"""

    path: str
    body: tuple[Stmt, ...]
    lloc: int
    parse_errors: tuple[ParseError, ...]
    source: str = ""

    @property
    def is_valid(self) -> bool:
        return not self.parse_errors


# ---------------------------------------------------------------------------
# Traversal
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainSite:
    """An if chain together with the statement that follows it in its block"""

    chain: IfChain
    next_stmt: Optional[Stmt]


def chains_walk(body: tuple[Stmt, ...]) -> Iterator[ChainSite]:
    """
    Yield every if chain reachable from a block, outer chains first

    Args:
        body: Statement block to traverse.

    Yields:
        Chain sites in source order.
    """
    for index, stmt in enumerate(body):
        if isinstance(stmt, IfChainStmt):
            next_stmt: Optional[Stmt] = body[index + 1] if index + 1 < len(body) else None
            yield ChainSite(chain=stmt.chain, next_stmt=next_stmt)
            for branch in stmt.chain.branches:
                yield from chains_walk(branch.body)
            if stmt.chain.else_body is not None:
                yield from chains_walk(stmt.chain.else_body)
        elif isinstance(stmt, OpaqueCompoundStmt):
            for nested in stmt.bodies:
                yield from chains_walk(nested)
