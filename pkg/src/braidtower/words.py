"""
Shared text grammar for generator words.

A word is a whitespace-separated list of tokens of the form ``<letter><index>``
with an optional ``^<exponent>`` suffix, e.g. ``t0 t1^-1 t2^3``.  The letter
identifies the alphabet:

- ``s`` : generators of the finite braid-type group (1-based),
- ``r`` : generators of the B-type group (1-based),
- ``t`` : generators of the affine-type group (0-based),
- ``a`` : ambient braid generators (1-based).

A single word never mixes alphabets.  Exponent 0 is rejected.
"""

from __future__ import annotations

import re

LETTERS = "srta"

_TOKEN_RE = re.compile(r"([a-z]+)(\d+)(?:\^(-?\d+))?\Z")


class WordParseError(ValueError):
    """Raised on malformed word text; carries the offending token and offset."""

    def __init__(self, message: str, token: str, offset: int):
        super().__init__(f"{message}: token {token!r} at byte offset {offset}")
        self.token = token
        self.offset = offset


def parse_word(text: str) -> tuple[str | None, list[tuple[int, int]]]:
    """
    Parse word text into ``(letter, [(index, exponent), ...])``.

    The letter is None for the empty word.

    >>> parse_word("t0 t1^-1 t2^3")
    ('t', [(0, 1), (1, -1), (2, 3)])
    >>> parse_word("  ")
    (None, [])
    """
    letter: str | None = None
    letters: list[tuple[int, int]] = []
    offset = 0
    for token in text.split():
        offset = text.index(token, offset)
        m = _TOKEN_RE.match(token)
        if m is None or m.group(1) not in LETTERS:
            raise WordParseError("unrecognized token", token, offset)
        tok_letter, index, exp = m.group(1), int(m.group(2)), m.group(3)
        exponent = 1 if exp is None else int(exp)
        if exponent == 0:
            raise WordParseError("exponent 0 is not allowed", token, offset)
        if letter is None:
            letter = tok_letter
        elif tok_letter != letter:
            raise WordParseError(
                f"mixed alphabets ({letter!r} and {tok_letter!r})", token, offset
            )
        letters.append((index, exponent))
        offset += len(token)
    return letter, letters


def format_word(letter: str, letters: list[tuple[int, int]] | tuple) -> str:
    """Inverse of parse_word; the empty word formats to the empty string."""
    if letter not in LETTERS:
        raise ValueError(f"unknown alphabet letter {letter!r}")
    parts = []
    for index, exponent in letters:
        if exponent == 1:
            parts.append(f"{letter}{index}")
        else:
            parts.append(f"{letter}{index}^{exponent}")
    return " ".join(parts)
