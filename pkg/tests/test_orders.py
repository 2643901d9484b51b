"""Comparison oracles: verdicts, strictness, axioms."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from orderchains.errors import DomainMismatchError, ParseError
from orderchains.orders import (
    EQ,
    GT,
    INCOMPARABLE,
    LT,
    Element,
    Tag,
    check_axioms,
    format_element,
    make_element,
    make_order,
    parse_element,
)

nat_words = st.lists(st.integers(0, 5), max_size=5).map(tuple)
bit_words = st.lists(st.integers(0, 1), max_size=6).map(tuple)


def elems(tag, payloads):
    return [make_element(tag, p) for p in payloads]


@pytest.mark.parametrize(
    "a,b,want",
    [
        (2, 6, LT),
        (6, 2, GT),
        (4, 4, EQ),
        (4, 6, INCOMPARABLE),
        (1, 7, LT),
    ],
)
def test_divides_verdicts(a, b, want):
    "divisibility compares by the divides relation"
    order = make_order("Divides")
    ea, eb = elems(Tag.NAT, [a, b])
    assert order.compare(ea, eb) is want


def test_divides_rejects_zero():
    "zero is outside the divisibility domain"
    with pytest.raises(ParseError):
        parse_element("0", Tag.NAT)
    with pytest.raises(DomainMismatchError):
        Element(Tag.NAT, 0)


def test_strictness_only_changes_related():
    "compare is strictness-free; related projects EQ by flavour"
    strict = make_order("Divides", strict=True)
    loose = make_order("Divides", strict=False)
    a, b = elems(Tag.NAT, [4, 4])
    assert strict.compare(a, b) is loose.compare(a, b) is EQ
    assert not strict.related(a, b)
    assert loose.related(a, b)


def test_delta_relates_only_equal_values():
    "the identity oracle sees equal or incomparable, nothing else"
    order = make_order("Delta", strict=False, tag=Tag.INT)
    a, b, c = elems(Tag.INT, [3, 3, 5])
    assert order.compare(a, b) is EQ
    assert order.compare(a, c) is INCOMPARABLE
    assert order.related(a, b)
    assert not make_order("Delta", strict=True, tag=Tag.INT).related(a, b)


@pytest.mark.parametrize(
    "a,b,want",
    [
        ((), (0,), LT),
        ((0,), (0, 3), LT),
        ((0, 3), (0,), GT),
        ((1,), (2,), INCOMPARABLE),
        ((0, 1), (0, 1), EQ),
    ],
)
def test_prefix_order_verdicts(a, b, want):
    "initial segments sit below their extensions"
    order = make_order("SubsetWordNat")
    ea, eb = elems(Tag.WORD_NAT, [a, b])
    assert order.compare(ea, eb) is want


@pytest.mark.parametrize(
    "a,b,want",
    [
        ((0,), (1,), GT),
        ((1,), (0,), LT),
        ((), (5,), LT),
        ((1, 7), (1, 2, 9), LT),
        ((2,), (1, 9), LT),
    ],
)
def test_reverse_lex_verdicts(a, b, want):
    "prefixes first, then larger first-disagreement wins the bottom"
    order = make_order("RL")
    ea, eb = elems(Tag.WORD_NAT, [a, b])
    assert order.compare(ea, eb) is want


def test_reverse_lex_filler_chain():
    "1^n 0 words descend as n grows"
    order = make_order("RL")
    w0, w10, w110 = elems(Tag.WORD_NAT, [(0,), (1, 0), (1, 1, 0)])
    assert order.compare(w0, w10) is GT
    assert order.compare(w10, w110) is GT
    assert order.compare(w0, w110) is GT


@given(nat_words, nat_words)
def test_reverse_lex_sort_key_embeds(a, b):
    "sort_key agreement with compare on random word pairs"
    order = make_order("RL")
    ea, eb = elems(Tag.WORD_NAT, [a, b])
    verdict = order.compare(ea, eb)
    ka, kb = order.sort_key(ea), order.sort_key(eb)
    assert (verdict is LT) == (ka < kb)
    assert (verdict is EQ) == (ka == kb)


@given(bit_words, bit_words)
def test_bit_lex_sort_key_embeds(a, b):
    "lex order on bit words matches its key"
    order = make_order("LexBit")
    ea, eb = elems(Tag.WORD_BIT, [a, b])
    verdict = order.compare(ea, eb)
    ka, kb = order.sort_key(ea), order.sort_key(eb)
    assert (verdict is LT) == (ka < kb)
    assert (verdict is EQ) == (ka == kb)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_int_less_matches_python(a, b):
    "integer oracle is the native order"
    order = make_order("IntLess")
    ea, eb = elems(Tag.INT, [a, b])
    verdict = order.compare(ea, eb)
    assert verdict is (EQ if a == b else LT if a < b else GT)


def test_domain_mismatch_raises():
    "an oracle refuses elements of the wrong tag"
    order = make_order("IntLess")
    with pytest.raises(DomainMismatchError):
        order.compare(make_element(Tag.INT, 1), make_element(Tag.RATIONAL, Fraction(1)))


@pytest.mark.parametrize("name", ["Divides", "delta", "INTLESS", "rl", "LexBit", "RatLess"])
def test_make_order_case_insensitive(name):
    "names resolve regardless of case"
    assert make_order(name).name.lower() == name.lower()


def test_make_order_unknown_name():
    with pytest.raises(ParseError):
        make_order("nosuch")


def test_element_round_trip():
    "format and parse are inverse on every tag"
    cases = [
        (Tag.NAT, "7"),
        (Tag.INT, "-3"),
        (Tag.RATIONAL, "3/8"),
        (Tag.WORD_NAT, "1.1.0"),
        (Tag.WORD_NAT, "e"),
        (Tag.WORD_BIT, "0101"),
        (Tag.WORD_BIT, "e"),
    ]
    for tag, text in cases:
        assert format_element(parse_element(text, tag)) == text


def test_rational_formats_as_fraction():
    "whole rationals still print with a denominator"
    assert format_element(make_element(Tag.RATIONAL, 0)) == "0/1"
    assert format_element(make_element(Tag.RATIONAL, Fraction(4, 2))) == "2/1"


@pytest.mark.parametrize(
    "name,tag,payloads",
    [
        ("Divides", Tag.NAT, range(1, 13)),
        ("IntLess", Tag.INT, range(-4, 5)),
        ("RatLess", Tag.RATIONAL, [Fraction(i, 7) for i in range(8)]),
        ("SubsetWordBit", Tag.WORD_BIT, [(), (0,), (1,), (0, 0), (0, 1), (1, 0)]),
        ("RL", Tag.WORD_NAT, [(), (0,), (1,), (2,), (0, 0), (1, 0), (2, 2)]),
        ("LexBit", Tag.WORD_BIT, [(), (0,), (1,), (0, 1), (1, 1)]),
    ],
)
@pytest.mark.parametrize("strict", [True, False])
def test_axioms_hold_on_small_supports(name, tag, payloads, strict):
    "default axiom profile passes on honest oracles"
    order = make_order(name, strict=strict)
    report = check_axioms(order, elems(tag, payloads))
    assert report.ok, report.describe()


def test_totality_probe_finds_incomparable_pair():
    "asking for totality on a partial order names a witness"
    order = make_order("SubsetWordBit")
    support = elems(Tag.WORD_BIT, [(), (0,), (1,)])
    report = check_axioms(order, support, axioms=("totality",))
    assert not report.ok
    witness = report.violations[0].witness
    assert {format_element(e) for e in witness} == {"0", "1"}


def test_linear_oracles_check_totality_by_default():
    "linear oracles include totality in the default profile"
    order = make_order("IntLess")
    report = check_axioms(order, elems(Tag.INT, [1, 2, 3]))
    assert "totality" in report.checked


def test_unknown_axiom_name():
    with pytest.raises(ParseError):
        check_axioms(make_order("IntLess"), [], axioms=("density",))
