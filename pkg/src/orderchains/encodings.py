"""Structure-preserving encodings between word domains and the rationals.

``word_to_bits`` embeds nat-words into bit-words so that the prefix
order is preserved and reflected; ``word_to_dyadic`` embeds nat-words
into dyadic rationals so that the reverse-entry lexicographic order is
preserved and reflected.  All rational arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArgumentOrderError, DomainMismatchError
from .words import Word


def double_bits(n: int) -> Word:
    """Binary digits of n with every bit doubled; 0 encodes to (0, 0)."""
    if n < 0:
        raise DomainMismatchError("double_bits is defined on the naturals")
    out = []
    for ch in format(n, "b"):
        bit = int(ch)
        out.append(bit)
        out.append(bit)
    return tuple(out)


def word_to_bits(word: Word) -> Word:
    """Encode a nat-word as doubled-bit entry codes joined by 01 markers.

    The marker can never occur inside a doubled-bit block, so decoding
    is unambiguous and prefixes map exactly to prefixes.
    """
    out: list[int] = []
    for entry in word:
        out.extend(double_bits(entry))
        out.append(0)
        out.append(1)
    return tuple(out)


def word_to_dyadic(word: Word) -> Fraction:
    """Encode a nat-word as the dyadic rational 0.0^{a_0}1 0^{a_1}1 ...

    in binary: each entry contributes that many zeros and then a one.
    The empty word encodes to 0.  Larger entries push the next one
    further right, which realises the reverse-entry comparison, and
    extending a word only adds smaller binary digits, which keeps
    prefixes below their extensions.
    """
    exponent = 0
    total = Fraction(0)
    for entry in word:
        exponent += entry + 1
        total += Fraction(1, 2**exponent)
    return total


def format_dyadic_binary(value: Fraction) -> str:
    """Binary expansion of a dyadic rational in [0, 1)."""
    if value < 0 or value >= 1:
        raise DomainMismatchError("binary expansion expects a value in [0, 1)")
    denom = value.denominator
    k = denom.bit_length() - 1
    if 2**k != denom:
        raise DomainMismatchError(f"{value} is not dyadic")
    if k == 0:
        return "0."
    digits = format(value.numerator * (2**k // denom), f"0{k}b")
    return "0." + digits


def lex_between(a: Word, b: Word) -> Word:
    """A bit-word ending in 1 strictly between a and b lexicographically.

    Both inputs must end in 1 and satisfy a < b.  When a is a prefix of
    b, padding a with zeros up to b's length and closing with 1 lands
    between them; otherwise the first disagreement already separates the
    words and appending 1 to a keeps it above a without reaching b.
    """
    for w in (a, b):
        if not w or w[-1] != 1:
            raise DomainMismatchError(f"lex_between arguments must end in 1, got {w!r}")
    if not _bit_lex_less(a, b):
        raise ArgumentOrderError(f"{a!r} does not precede {b!r} lexicographically")
    if b[: len(a)] == a:
        return a + (0,) * (len(b) - len(a)) + (1,)
    return a + (1,)


def _bit_lex_less(x: Word, y: Word) -> bool:
    if x == y:
        return False
    for xe, ye in zip(x, y):
        if xe != ye:
            return xe < ye
    return len(x) < len(y)
