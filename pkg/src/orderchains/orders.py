"""Comparison oracles over countable element domains.

Each oracle answers a four-valued ``compare`` (LT / EQ / GT /
INCOMPARABLE) that is independent of strictness; ``related`` projects
the verdict onto the strict or reflexive reading the oracle was built
with.  Linear oracles additionally expose a ``sort_key`` that embeds
their order into Python's native comparisons, which the chain
algorithms use for rank compression.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError, ParseError
from .words import (
    Word,
    format_bit_word,
    format_nat_word,
    parse_bit_word,
    parse_nat_word,
)


class Tag(enum.Enum):
    """Domain tag of an element."""

    NAT = "nat"          # naturals without zero
    INT = "int"
    RATIONAL = "rational"
    WORD_NAT = "word"    # finite words over the naturals (zero allowed)
    WORD_BIT = "bits"    # finite words over {0, 1}

    def __str__(self):
        return self.value


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"

    def __str__(self):
        return self.value


LT, EQ, GT, INCOMPARABLE = Cmp.LT, Cmp.EQ, Cmp.GT, Cmp.INCOMPARABLE

_MIRROR = {LT: GT, GT: LT, EQ: EQ, INCOMPARABLE: INCOMPARABLE}


@dataclass(frozen=True, slots=True)
class Element:
    """A tagged value from one of the supported domains."""

    tag: Tag
    value: object

    def __post_init__(self):
        tag, value = self.tag, self.value
        if tag is Tag.NAT:
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise DomainMismatchError(f"nat elements are integers >= 1, got {value!r}")
        elif tag is Tag.INT:
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainMismatchError(f"int elements are integers, got {value!r}")
        elif tag is Tag.RATIONAL:
            if not isinstance(value, Fraction):
                raise DomainMismatchError(f"rational elements are Fractions, got {value!r}")
        elif tag is Tag.WORD_NAT:
            if not _is_word(value):
                raise DomainMismatchError(f"word elements are tuples of naturals, got {value!r}")
        elif tag is Tag.WORD_BIT:
            if not _is_word(value) or any(b not in (0, 1) for b in value):
                raise DomainMismatchError(f"bit-word elements are tuples over {{0,1}}, got {value!r}")

    def __str__(self):
        return format_element(self)


def _is_word(value) -> bool:
    return isinstance(value, tuple) and all(
        isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in value
    )


def make_element(tag: Tag, payload) -> Element:
    """Build an element, normalising convenient payload spellings."""
    if tag is Tag.RATIONAL and not isinstance(payload, Fraction):
        payload = Fraction(payload)
    if tag in (Tag.WORD_NAT, Tag.WORD_BIT) and not isinstance(payload, tuple):
        payload = tuple(payload)
    return Element(tag, payload)


def parse_element(text: str, tag: Tag) -> Element:
    """Parse one textual token for the given domain tag."""
    try:
        if tag is Tag.NAT:
            value = int(text)
            if value < 1:
                raise ParseError(f"naturals here exclude zero, got {text!r}")
            return Element(tag, value)
        if tag is Tag.INT:
            return Element(tag, int(text))
        if tag is Tag.RATIONAL:
            return Element(tag, Fraction(text))
        if tag is Tag.WORD_NAT:
            return Element(tag, parse_nat_word(text))
        if tag is Tag.WORD_BIT:
            return Element(tag, parse_bit_word(text))
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad {tag.value} token {text!r}: {exc}") from exc
    raise ParseError(f"unknown tag {tag!r}")


def format_element(el: Element) -> str:
    """Render an element in the same syntax parse_element accepts."""
    if el.tag is Tag.RATIONAL:
        frac = el.value
        return f"{frac.numerator}/{frac.denominator}"
    if el.tag is Tag.WORD_NAT:
        return format_nat_word(el.value)
    if el.tag is Tag.WORD_BIT:
        return format_bit_word(el.value)
    return str(el.value)


class Order:
    """Base of all comparison oracles.

    Subclasses fix the external ``name``, the domain tag, whether the
    order is linear, and the payload comparison ``_compare``.
    """

    name: str = "?"
    is_linear: bool = False

    def __init__(self, strict: bool = True, domain: Tag | None = None):
        self.strict = strict
        if domain is not None:
            self.domain = domain

    def compare(self, a: Element, b: Element) -> Cmp:
        """Four-valued comparison; LT always means strictly below."""
        self.check_element(a)
        self.check_element(b)
        return self._compare(a.value, b.value)

    def related(self, a: Element, b: Element) -> bool:
        """True iff a precedes b under this oracle's strictness convention."""
        verdict = self.compare(a, b)
        return verdict is LT or (verdict is EQ and not self.strict)

    def check_element(self, el: Element) -> None:
        if el.tag is not self.domain:
            raise DomainMismatchError(
                f"{self.name} compares {self.domain.value} elements, got {el.tag.value}"
            )

    def sort_key(self, el: Element):
        """Order-embedding key into Python comparisons (linear oracles only)."""
        raise NotImplementedError(f"{self.name} has no sort key")

    def _compare(self, x, y) -> Cmp:
        raise NotImplementedError

    def __repr__(self):
        kind = "strict" if self.strict else "non-strict"
        return f"{self.name}({kind})"


class DividesOrder(Order):
    """Divisibility on the naturals without zero."""

    name = "Divides"
    domain = Tag.NAT

    def _compare(self, x, y):
        if x == y:
            return EQ
        if y % x == 0:
            return LT
        if x % y == 0:
            return GT
        return INCOMPARABLE


class DeltaOrder(Order):
    """The identity relation on any domain: only equal pairs are related."""

    name = "Delta"

    def __init__(self, strict: bool = True, domain: Tag = Tag.INT):
        super().__init__(strict=strict, domain=domain)

    def _compare(self, x, y):
        return EQ if x == y else INCOMPARABLE


class IntLessOrder(Order):
    """The usual order on the integers."""

    name = "IntLess"
    domain = Tag.INT
    is_linear = True

    def _compare(self, x, y):
        if x == y:
            return EQ
        return LT if x < y else GT

    def sort_key(self, el):
        return el.value


class RatLessOrder(Order):
    """The usual order on the rationals."""

    name = "RatLess"
    domain = Tag.RATIONAL
    is_linear = True

    def _compare(self, x, y):
        if x == y:
            return EQ
        return LT if x < y else GT

    def sort_key(self, el):
        return el.value


class PrefixOrder(Order):
    """Initial-segment order on words: a below b iff a is a prefix of b."""

    def __init__(self, strict: bool = True, domain: Tag = Tag.WORD_NAT):
        if domain not in (Tag.WORD_NAT, Tag.WORD_BIT):
            raise DomainMismatchError("prefix order is over word domains")
        super().__init__(strict=strict, domain=domain)

    @property
    def name(self):
        return "SubsetWordNat" if self.domain is Tag.WORD_NAT else "SubsetWordBit"

    def _compare(self, x, y):
        if x == y:
            return EQ
        if len(x) < len(y) and y[: len(x)] == x:
            return LT
        if len(y) < len(x) and x[: len(y)] == y:
            return GT
        return INCOMPARABLE


class ReverseLexOrder(Order):
    """Linear order on nat-words: prefixes come first, and at the first
    disagreement the *larger* entry makes the whole word smaller."""

    name = "RL"
    domain = Tag.WORD_NAT
    is_linear = True

    def _compare(self, x, y):
        if x == y:
            return EQ
        for xe, ye in zip(x, y):
            if xe != ye:
                return LT if xe > ye else GT
        return LT if len(x) < len(y) else GT

    def sort_key(self, el):
        # Negating entries turns the reversed entry order into Python's
        # tuple order while keeping prefixes smaller.
        return tuple(-e for e in el.value)


class BitLexOrder(Order):
    """Lexicographic order on bit-words with prefixes smaller."""

    name = "LexBit"
    domain = Tag.WORD_BIT
    is_linear = True

    def _compare(self, x, y):
        if x == y:
            return EQ
        for xe, ye in zip(x, y):
            if xe != ye:
                return LT if xe < ye else GT
        return LT if len(x) < len(y) else GT

    def sort_key(self, el):
        return el.value


ORDER_NAMES = (
    "Divides",
    "Delta",
    "IntLess",
    "SubsetWordNat",
    "SubsetWordBit",
    "RL",
    "LexBit",
    "RatLess",
)


def make_order(name: str, strict: bool = True, tag: Tag | None = None) -> Order:
    """Build an oracle by external name (case-insensitive).

    ``tag`` selects the domain for Delta; the rest have fixed domains.
    """
    key = name.lower()
    if key == "divides":
        return DividesOrder(strict)
    if key == "delta":
        return DeltaOrder(strict, domain=tag if tag is not None else Tag.INT)
    if key == "intless":
        return IntLessOrder(strict)
    if key == "subsetwordnat":
        return PrefixOrder(strict, domain=Tag.WORD_NAT)
    if key == "subsetwordbit":
        return PrefixOrder(strict, domain=Tag.WORD_BIT)
    if key == "rl":
        return ReverseLexOrder(strict)
    if key == "lexbit":
        return BitLexOrder(strict)
    if key == "ratless":
        return RatLessOrder(strict)
    raise ParseError(f"unknown order {name!r}; choose one of {', '.join(ORDER_NAMES)}")


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[Element, ...]

    def __str__(self):
        elems = ", ".join(format_element(e) for e in self.witness)
        return f"{self.axiom} violated by ({elems})"


@dataclass(frozen=True)
class AxiomReport:
    order_name: str
    strict: bool
    checked: tuple[str, ...]
    violations: tuple[AxiomViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.ok:
            return f"{self.order_name}: no violations ({', '.join(self.checked)})"
        lines = [str(v) for v in self.violations]
        return "\n".join(lines)


KNOWN_AXIOMS = ("reflexivity", "antisymmetry", "transitivity", "totality")


def check_axioms(order: Order, support, axioms=None) -> AxiomReport:
    """Check order axioms exhaustively on a finite support.

    By default reflexivity, antisymmetry and transitivity are checked,
    plus totality when the oracle claims linearity.  Pass ``axioms`` to
    probe a different set (e.g. totality of a partial order).  The
    report lists every violated instance.
    """
    elems = list(support)
    if axioms is None:
        axioms = ("reflexivity", "antisymmetry", "transitivity") + (
            ("totality",) if order.is_linear else ()
        )
    else:
        axioms = tuple(axioms)
        for ax in axioms:
            if ax not in KNOWN_AXIOMS:
                raise ParseError(f"unknown axiom {ax!r}; known: {', '.join(KNOWN_AXIOMS)}")
    n = len(elems)
    cmp_matrix = [[order.compare(a, b) for b in elems] for a in elems]
    violations: list[AxiomViolation] = []

    if "reflexivity" in axioms:
        for i, a in enumerate(elems):
            if cmp_matrix[i][i] is not EQ:
                violations.append(AxiomViolation("reflexivity", (a,)))

    if "antisymmetry" in axioms:
        for i in range(n):
            for j in range(i + 1, n):
                if cmp_matrix[j][i] is not _MIRROR[cmp_matrix[i][j]]:
                    violations.append(AxiomViolation("antisymmetry", (elems[i], elems[j])))
                elif cmp_matrix[i][j] is EQ and elems[i] != elems[j]:
                    violations.append(AxiomViolation("antisymmetry", (elems[i], elems[j])))

    if "transitivity" in axioms:
        strict = order.strict
        rel = [
            [c is LT or (c is EQ and not strict) for c in row]
            for row in cmp_matrix
        ]
        for i in range(n):
            rel_i = rel[i]
            for j in range(n):
                if not rel_i[j]:
                    continue
                rel_j = rel[j]
                for k in range(n):
                    if rel_j[k] and not rel_i[k]:
                        violations.append(
                            AxiomViolation("transitivity", (elems[i], elems[j], elems[k]))
                        )

    if "totality" in axioms:
        for i in range(n):
            for j in range(i + 1, n):
                if cmp_matrix[i][j] is INCOMPARABLE:
                    violations.append(AxiomViolation("totality", (elems[i], elems[j])))

    return AxiomReport(order.name, order.strict, axioms, tuple(violations))
