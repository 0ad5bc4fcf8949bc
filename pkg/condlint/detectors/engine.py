"""
Detection orchestration over a parsed module.

Every if chain reachable from the module body is checked by every rule with
its following-sibling context. Rules are pure functions of the IR, so the
result depends on the module alone.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Callable, Iterable, Optional, Union

from condlint.common.errors import InvalidModuleError
from condlint.common.types import Diagnostic, PatternKind
from condlint.detectors import rules
from condlint.fixes.suggester import suggest_fix
from condlint.frontend.ir import IfChain, ParsedModule, Stmt, chains_walk

__all__ = ["detect_all", "chain_detect"]

logger = logging.getLogger(__name__)

_Rule = Callable[
    [IfChain, Optional[Stmt], str], Union[Optional[Diagnostic], list[Diagnostic]]
]

RULES: tuple[_Rule, ...] = (
    rules.detect_if_else_return_bool,
    rules.detect_if_return_bool,
    rules.detect_confusing_else,
    rules.detect_else_if,
    rules.detect_nested_if,
    rules.detect_empty_if_body,
    rules.detect_empty_else_body,
    rules.detect_unnecessary_elif,
    rules.detect_duplication_family,
    rules.detect_assign_family,
)


def chain_detect(chain: IfChain, next_stmt: Optional[Stmt], path: str) -> list[Diagnostic]:
    """
    Apply every rule to one chain

    Args:
        chain: Chain to inspect.
        next_stmt: Statement following the chain in its block.
        path: Module path for diagnostics.

    Returns:
        Diagnostics in rule order.
    """
    found: list[Diagnostic] = []
    for rule in RULES:
        result = rule(chain, next_stmt, path)
        if isinstance(result, list):
            found.extend(result)
        elif result is not None:
            found.append(result)
    return found


def detect_all(
    module: ParsedModule,
    patterns: Optional[Iterable[PatternKind]] = None,
    suggestions: bool = True,
) -> list[Diagnostic]:
    """
    Detect every anti-pattern occurrence in a module

    Args:
        module: Parsed module without parse errors.
        patterns: Restrict output to these kinds; None keeps all fifteen.
        suggestions: Attach rewrite suggestions to the diagnostics.

    Returns:
        Diagnostics sorted by file, span and pattern.

    Raises:
        InvalidModuleError: If the module has parse errors.
    """
    if not module.is_valid:
        raise InvalidModuleError(module.path, module.parse_errors[0].message)
    selected = frozenset(patterns) if patterns is not None else None

    diagnostics: list[Diagnostic] = []
    for site in chains_walk(module.body):
        for diagnostic in chain_detect(site.chain, site.next_stmt, module.path):
            if selected is not None and diagnostic.pattern not in selected:
                continue
            if suggestions:
                suggestion = suggest_fix(diagnostic, site.chain, site.next_stmt, module.source)
                diagnostic = replace(diagnostic, suggestion=suggestion)
            diagnostics.append(diagnostic)

    logger.debug("%s: %d diagnostic(s)", module.path, len(diagnostics))
    return sorted(diagnostics, key=Diagnostic.sortKey_get)
