"""Chain detection: the DP, its fast paths, patience sorting, UP decider."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from helpers import brute_longest_chain
from orderchains.chains import (
    Sequence,
    constant_subsequence,
    cycle_witness,
    decide_membership_up,
    longest_chain,
    parse_sequence,
    parse_up_sequence,
    patience_chain_length,
    verify_witness,
)
from orderchains.errors import (
    DomainMismatchError,
    EmptySequenceError,
    LinearityError,
    ParseError,
    WitnessIndexError,
)
from orderchains.orders import Tag, make_element, make_order

int_less = make_order("IntLess")
divides = make_order("Divides")


def int_seq(payloads):
    return Sequence.from_payloads(Tag.INT, payloads)


def test_classic_example():
    "textbook increasing subsequence"
    seq = int_seq([3, 1, 4, 1, 5, 9, 2, 6])
    length, witness = longest_chain(seq, int_less)
    assert length == 4
    assert witness.indices == (0, 2, 4, 5)
    assert [e.value for e in witness.values] == [3, 4, 5, 9]


def test_single_element():
    length, witness = longest_chain(int_seq([42]), int_less)
    assert length == 1
    assert witness.indices == (0,)


def test_decreasing_sequence():
    "strictly decreasing input has only singleton chains"
    length, witness = longest_chain(int_seq([5, 4, 3, 2, 1]), int_less)
    assert length == 1
    assert witness.indices == (0,)


def test_empty_sequence_raises():
    with pytest.raises(EmptySequenceError):
        longest_chain(int_seq([]), int_less)
    with pytest.raises(EmptySequenceError):
        patience_chain_length(int_seq([]), int_less)


def test_non_strict_counts_repeats():
    "equal neighbours extend a chain only in the reflexive reading"
    seq = int_seq([2, 2, 2])
    strict_len, _ = longest_chain(seq, int_less)
    loose_len, _ = longest_chain(seq, make_order("IntLess", strict=False))
    assert strict_len == 1
    assert loose_len == 3


def test_partial_order_chain():
    "divisibility chains only need consecutive relatedness"
    seq = Sequence.from_payloads(Tag.NAT, [6, 2, 3, 4, 8, 9, 16])
    length, witness = longest_chain(seq, divides)
    assert length == 4
    assert witness.indices == (1, 3, 4, 6)
    assert verify_witness(witness.indices, seq, divides)


def test_witness_is_lex_least():
    "ties are broken toward the earliest index vector"
    seq = int_seq([1, 1, 2, 2])
    _, witness = longest_chain(seq, int_less)
    assert witness.indices == (0, 2)


@pytest.mark.parametrize("method", ["generic", "alphabet", "ranked"])
def test_methods_agree_on_linear_orders(method):
    "all internal paths give the same length and witness"
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 60)
        seq = int_seq([rng.randint(0, 9) for _ in range(n)])
        want_len, want_idx = longest_chain(seq, int_less)
        got_len, got_wit = longest_chain(seq, int_less, method=method)
        assert got_len == want_len
        assert got_wit.indices == want_idx.indices


def test_alphabet_method_on_partial_order():
    "the matrix path handles incomparability too"
    rng = random.Random(11)
    for _ in range(30):
        seq = Sequence.from_payloads(
            Tag.NAT, [rng.randint(1, 12) for _ in range(rng.randint(1, 50))]
        )
        want_len, want_wit = longest_chain(seq, divides, method="generic")
        got_len, got_wit = longest_chain(seq, divides, method="alphabet")
        assert got_len == want_len
        assert got_wit.indices == want_wit.indices


def test_ranked_method_requires_linear():
    with pytest.raises(LinearityError):
        longest_chain(Sequence.from_payloads(Tag.NAT, [1, 2]), divides, method="ranked")


def test_unknown_method():
    with pytest.raises(ParseError):
        longest_chain(int_seq([1]), int_less, method="fast")


@given(st.lists(st.integers(0, 8), min_size=1, max_size=9))
@settings(max_examples=200)
def test_dp_matches_brute_force(payloads):
    "length and lex-least witness match exhaustive search"
    seq = int_seq(payloads)
    length, witness = longest_chain(seq, int_less)
    want_len, want_idx = brute_longest_chain(seq, int_less)
    assert length == want_len
    assert witness.indices == want_idx


@given(st.lists(st.integers(1, 10), min_size=1, max_size=9))
@settings(max_examples=200)
def test_dp_matches_brute_force_divides(payloads):
    "same exhaustive agreement over the divisibility order"
    seq = Sequence.from_payloads(Tag.NAT, payloads)
    length, witness = longest_chain(seq, divides)
    want_len, want_idx = brute_longest_chain(seq, divides)
    assert length == want_len
    assert witness.indices == want_idx


@given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=16), min_size=1, max_size=60))
def test_patience_matches_dp(payloads):
    "patience sorting equals the DP on a linear order"
    seq = Sequence.from_payloads(Tag.RATIONAL, payloads)
    order = make_order("RatLess")
    length, _ = longest_chain(seq, order)
    assert patience_chain_length(seq, order) == length


@given(st.lists(st.integers(0, 6), min_size=1, max_size=40))
def test_patience_matches_dp_non_strict(payloads):
    "same agreement in the reflexive reading"
    seq = int_seq(payloads)
    order = make_order("IntLess", strict=False)
    length, _ = longest_chain(seq, order)
    assert patience_chain_length(seq, order) == length


def test_patience_needs_linear_order():
    with pytest.raises(LinearityError):
        patience_chain_length(Sequence.from_payloads(Tag.NAT, [1, 2]), divides)


def test_verify_witness_rejects_bad_indices():
    seq = int_seq([1, 2, 3])
    with pytest.raises(WitnessIndexError):
        verify_witness([0, 3], seq, int_less)
    assert not verify_witness([1, 0], seq, int_less)
    assert not verify_witness([0, 0], seq, int_less)
    assert verify_witness([], seq, int_less)
    assert verify_witness([0, 1, 2], seq, int_less)


def test_verify_witness_rejects_broken_link():
    seq = int_seq([1, 5, 2])
    assert not verify_witness([1, 2], seq, int_less)


def test_constant_subsequence_earliest_tie():
    "ties go to the value seen first"
    seq = int_seq([7, 3, 3, 7])
    value, count = constant_subsequence(seq)
    assert value.value == 7
    assert count == 2


@given(st.lists(st.integers(0, 4), min_size=1, max_size=30))
def test_constant_subsequence_counts(payloads):
    "the reported count is the true multiplicity and is maximal"
    value, count = constant_subsequence(int_seq(payloads))
    assert payloads.count(value.value) == count
    assert all(payloads.count(v) <= count for v in payloads)


def test_parse_sequence_round_trip():
    seq = parse_sequence("3 1 4 1 5", Tag.INT)
    assert seq.payloads() == (3, 1, 4, 1, 5)


def test_sequence_rejects_mixed_tags():
    with pytest.raises(DomainMismatchError):
        Sequence(Tag.INT, (make_element(Tag.INT, 1), make_element(Tag.NAT, 1)))


def test_parse_up_sequence():
    up = parse_up_sequence("2 | 2 4 8", Tag.NAT)
    assert up.prefix.payloads() == (2,)
    assert up.cycle.payloads() == (2, 4, 8)
    assert up.unroll(2).payloads() == (2, 2, 4, 8, 2, 4, 8)


def test_parse_up_sequence_empty_prefix():
    up = parse_up_sequence(" | 3", Tag.NAT)
    assert up.prefix.payloads() == ()


def test_parse_up_sequence_needs_bar():
    with pytest.raises(ParseError):
        parse_up_sequence("1 2 3", Tag.NAT)


def test_parse_up_sequence_needs_cycle():
    with pytest.raises(EmptySequenceError):
        parse_up_sequence("1 |", Tag.NAT)


def test_up_strict_divides_never_contains_infinite_chain():
    "a strict order on finitely many values caps every chain"
    up = parse_up_sequence("2 | 2 4 8", Tag.NAT)
    assert not decide_membership_up(up, divides)
    assert cycle_witness(up, divides) is None


def test_up_non_strict_self_loop():
    "any repeated value is an infinite chain in the reflexive reading"
    up = parse_up_sequence("| 3 5", Tag.NAT)
    loose = make_order("Divides", strict=False)
    assert decide_membership_up(up, loose)
    witness = cycle_witness(up, loose)
    assert len(witness) == 1


def test_up_delta_needs_equal_values():
    "under the identity oracle only repeats chain up"
    delta = make_order("Delta", strict=False, tag=Tag.INT)
    assert decide_membership_up(parse_up_sequence("| 1 2", Tag.INT), delta)
    strict_delta = make_order("Delta", strict=True, tag=Tag.INT)
    assert not decide_membership_up(parse_up_sequence("| 1 2", Tag.INT), strict_delta)


def test_up_cycle_witness_is_closed():
    "the witness list really is a directed cycle"
    up = parse_up_sequence("| 2 4 2 8", Tag.NAT)
    loose = make_order("Divides", strict=False)
    witness = cycle_witness(up, loose)
    assert witness is not None
    ring = witness + [witness[0]]
    assert all(loose.related(a, b) for a, b in zip(ring, ring[1:]))


def test_up_verdict_matches_unrolling_growth():
    "membership shows up as unbounded chain growth in unrollings"
    rng = random.Random(3)
    orders = [divides, make_order("Divides", strict=False), int_less]
    for _ in range(60):
        cycle = [rng.randint(1, 6) for _ in range(rng.randint(1, 3))]
        up = parse_up_sequence("| " + " ".join(map(str, cycle)), Tag.NAT)
        for order in orders:
            if order.domain is not Tag.NAT:
                up_o = parse_up_sequence("| " + " ".join(map(str, cycle)), order.domain)
            else:
                up_o = up
            short, _ = longest_chain(up_o.unroll(10), order)
            long, _ = longest_chain(up_o.unroll(20), order)
            grows = long > short
            assert decide_membership_up(up_o, order) == grows
