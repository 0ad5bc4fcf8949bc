"""
Structural fingerprints of token ranges.

A fingerprint is the fragment's token sequence with comments, line structure
and redundant outer parentheses removed and every remaining token separated by
one space. Literals are kept verbatim, so `b += 1` and `c += 1` differ while
`b+=1  # inc` and `b += 1` agree.
"""

from __future__ import annotations

import io
import tokenize
from typing import Iterable, Sequence

from condlint.frontend.ir import Fingerprint

__all__ = ["fingerprint", "fingerprintOfText_compute", "tokens_significant"]

_SKIPPED_TYPES: frozenset[int] = frozenset(
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

# Python 3.12 splits f-strings into several tokens; they are re-joined verbatim.
_FSTRING_START: int = getattr(tokenize, "FSTRING_START", -1)
_FSTRING_END: int = getattr(tokenize, "FSTRING_END", -2)

_OPENERS: dict[str, str] = {"(": ")", "[": "]", "{": "}"}


def tokens_significant(tokens: Iterable[tokenize.TokenInfo]) -> list[str]:
    """
    Token strings that take part in a fingerprint

    Args:
        tokens: Lexed tokens in source order.

    Returns:
        Token texts without comments, layout tokens or split f-string parts.
    """
    strings: list[str] = []
    fstring_depth: int = 0
    fstring_parts: list[tokenize.TokenInfo] = []
    for tok in tokens:
        if tok.type == _FSTRING_START:
            fstring_depth += 1
            fstring_parts.append(tok)
            continue
        if fstring_depth:
            fstring_parts.append(tok)
            if tok.type == _FSTRING_END:
                fstring_depth -= 1
                if fstring_depth == 0:
                    strings.append(_fstringText_join(fstring_parts))
                    fstring_parts = []
            continue
        if tok.type in _SKIPPED_TYPES:
            continue
        strings.append(tok.string)
    return strings


def _fstringText_join(parts: Sequence[tokenize.TokenInfo]) -> str:
    """
    Recover the source text of a split f-string

    Args:
        parts: Tokens from FSTRING_START to the matching FSTRING_END.

    Returns:
        Verbatim text for single-line f-strings, concatenated parts otherwise.
    """
    first, last = parts[0], parts[-1]
    if first.start[0] == last.end[0]:
        return first.line[first.start[1] : last.end[1]]
    return "".join(part.string for part in parts)


def _outerParens_strip(strings: list[str]) -> list[str]:
    """
    Remove parentheses that wrap the whole sequence

    Args:
        strings: Significant token strings.

    Returns:
        Sequence without redundant outer parentheses.
    """
    while len(strings) > 2 and strings[0] == "(" and strings[-1] == ")":
        depth = 0
        wraps_all = True
        for index, text in enumerate(strings):
            if text in _OPENERS:
                depth += 1
            elif text in _OPENERS.values():
                depth -= 1
                if depth == 0 and index != len(strings) - 1:
                    wraps_all = False
                    break
        if not wraps_all:
            break
        strings = strings[1:-1]
    return strings


def fingerprint(tokens: Iterable[tokenize.TokenInfo]) -> Fingerprint:
    """
    Fingerprint a lexed token range

    Args:
        tokens: Token subsequence of one fragment.

    Returns:
        Deterministic fingerprint; idempotent under re-fingerprinting.
    """
    strings = _outerParens_strip(tokens_significant(tokens))
    return Fingerprint(canon=" ".join(strings))


def fingerprintOfText_compute(text: str) -> Fingerprint:
    """
    Fingerprint a source fragment given as text

    The fragment is dedented to its first line so indented snippets lex.
    Fragments that cannot be lexed fall back to whitespace-separated words.

    Args:
        text: Source fragment.

    Returns:
        Fragment fingerprint.
    """
    lines = text.splitlines()
    if lines:
        first = lines[0]
        indent = first[: len(first) - len(first.lstrip())]
        if indent:
            lines = [line[len(indent) :] if line.startswith(indent) else line for line in lines]
    try:
        tokens = list(tokenize.generate_tokens(io.StringIO("\n".join(lines) + "\n").readline))
    except (tokenize.TokenError, SyntaxError):
        return Fingerprint(canon=" ".join(text.split()))
    return fingerprint(tokens)
