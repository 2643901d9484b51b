"""Finite words over the naturals and over {0, 1}.

Words are plain tuples of non-negative ints.  The textual form is
dot-separated entries for words over the naturals ("2.0.7"), a plain
digit string for bit-words ("0110"), and "e" for the empty word.
"""

from __future__ import annotations

from .errors import ParseError

Word = tuple[int, ...]

EMPTY_TOKEN = "e"


def parse_nat_word(text: str) -> Word:
    """Parse a dot-separated word over the naturals; "e" is the empty word."""
    if text == EMPTY_TOKEN:
        return ()
    if not text:
        raise ParseError("empty token is not a word; use 'e' for the empty word")
    parts = text.split(".")
    entries = []
    for part in parts:
        if not part.isdigit():
            raise ParseError(f"bad word entry {part!r} in token {text!r}")
        entries.append(int(part))
    return tuple(entries)


def format_nat_word(word: Word) -> str:
    """Inverse of parse_nat_word."""
    if not word:
        return EMPTY_TOKEN
    return ".".join(str(e) for e in word)


def parse_bit_word(text: str) -> Word:
    """Parse a string of 0/1 digits; "e" is the empty word."""
    if text == EMPTY_TOKEN:
        return ()
    if not text or any(ch not in "01" for ch in text):
        raise ParseError(f"bad bit-word token {text!r}")
    return tuple(int(ch) for ch in text)


def format_bit_word(word: Word) -> str:
    """Inverse of parse_bit_word."""
    if not word:
        return EMPTY_TOKEN
    return "".join(str(b) for b in word)


def is_prefix(a: Word, b: Word) -> bool:
    """True iff a is an initial segment of b (equality included)."""
    return len(a) <= len(b) and b[: len(a)] == a
