"""Chain detection in finite sequences.

A chain witness is a strictly increasing index vector whose consecutive
values are related under the oracle; relatedness is only required
between neighbours, not pairwise.  ``longest_chain`` is the reference
O(n^2) dynamic program with two rank-compressed fast paths:

* ``alphabet``: few distinct values; relatedness is precomputed as a
  small boolean matrix and the DP is vectorised over it.
* ``ranked``: linear oracles; values are rank-compressed through the
  oracle's sort key and the DP compares integer ranks.

``patience_chain_length`` is the independent O(n log n) patience-sorting
routine for linear oracles; it must agree with the DP on length.
"""

from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainMismatchError,
    EmptySequenceError,
    LinearityError,
    ParseError,
    WitnessIndexError,
)
from .orders import Element, Order, Tag, format_element, make_element, parse_element


@dataclass(frozen=True)
class Sequence:
    """A finite sequence of elements sharing one domain tag."""

    tag: Tag
    items: tuple[Element, ...]

    def __post_init__(self):
        for el in self.items:
            if el.tag is not self.tag:
                raise DomainMismatchError(
                    f"sequence tagged {self.tag.value} contains a {el.tag.value} element"
                )

    @classmethod
    def from_payloads(cls, tag: Tag, payloads) -> "Sequence":
        return cls(tag, tuple(make_element(tag, p) for p in payloads))

    def payloads(self) -> tuple:
        return tuple(el.value for el in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]


def parse_sequence(text: str, tag: Tag) -> Sequence:
    """Parse whitespace-separated element tokens."""
    tokens = text.split()
    return Sequence(tag, tuple(parse_element(t, tag) for t in tokens))


def format_sequence(seq: Sequence) -> str:
    return " ".join(format_element(el) for el in seq)


@dataclass(frozen=True)
class ChainWitness:
    """Positions and values of one chain inside a sequence."""

    indices: tuple[int, ...]
    values: tuple[Element, ...]


_ALPHABET_CUTOFF = 64
_SMALL_N = 32


def longest_chain(y: Sequence, order: Order, method: str = "auto") -> tuple[int, ChainWitness]:
    """Length and witness of the longest chain in y under the oracle.

    Among maximum-length chains the witness has the lexicographically
    least index vector.  ``method`` forces one of the internal paths
    ("generic", "alphabet", "ranked") instead of auto dispatch.
    """
    items = y.items
    n = len(items)
    if n == 0:
        raise EmptySequenceError("longest_chain needs a non-empty sequence")
    ids, distinct = _value_ids(items)

    if method == "auto":
        if n <= _SMALL_N:
            method = "generic"
        elif len(distinct) <= _ALPHABET_CUTOFF:
            method = "alphabet"
        elif order.is_linear:
            method = "ranked"
        else:
            method = "generic"

    if method == "generic":
        starts, rel = _suffix_lengths_generic(items, order)
    elif method == "alphabet":
        starts, rel = _suffix_lengths_alphabet(items, ids, distinct, order)
    elif method == "ranked":
        starts, rel = _suffix_lengths_ranked(items, ids, distinct, order)
    else:
        raise ParseError(f"unknown longest_chain method {method!r}")

    best = max(starts)
    indices: list[int] = []
    need = best
    prev = -1
    for i in range(n):
        if starts[i] == need and (prev < 0 or rel(prev, i)):
            indices.append(i)
            prev = i
            need -= 1
            if need == 0:
                break
    witness = ChainWitness(tuple(indices), tuple(items[i] for i in indices))
    return best, witness


def _value_ids(items):
    """Map each position to a dense id over the distinct values."""
    seen: dict[Element, int] = {}
    ids = []
    distinct = []
    for el in items:
        vid = seen.get(el)
        if vid is None:
            vid = len(distinct)
            seen[el] = vid
            distinct.append(el)
        ids.append(vid)
    return ids, distinct


def _suffix_lengths_generic(items, order):
    n = len(items)
    starts = [1] * n
    for i in range(n - 2, -1, -1):
        yi = items[i]
        best = 0
        for j in range(i + 1, n):
            if starts[j] > best and order.related(yi, items[j]):
                best = starts[j]
        starts[i] = 1 + best

    def rel(i, j):
        return order.related(items[i], items[j])

    return starts, rel


def _suffix_lengths_alphabet(items, ids, distinct, order):
    n = len(items)
    v = len(distinct)
    matrix = [[order.related(a, b) for b in distinct] for a in distinct]
    rel_np = np.array(matrix, dtype=bool).reshape(v, v)
    id_arr = np.array(ids, dtype=np.int64)
    starts = np.ones(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        mask = rel_np[ids[i]][id_arr[i + 1 :]]
        if mask.any():
            starts[i] = 1 + starts[i + 1 :][mask].max()
    starts = [int(s) for s in starts]

    def rel(i, j):
        return matrix[ids[i]][ids[j]]

    return starts, rel


def _suffix_lengths_ranked(items, ids, distinct, order):
    if not order.is_linear:
        raise LinearityError(f"{order.name} is not linear; ranked path unavailable")
    n = len(items)
    keys = [order.sort_key(el) for el in distinct]
    order_of = sorted(range(len(keys)), key=keys.__getitem__)
    rank_of_id = [0] * len(keys)
    for rank, vid in enumerate(order_of):
        rank_of_id[vid] = rank
    ranks = [rank_of_id[vid] for vid in ids]
    rank_arr = np.array(ranks, dtype=np.int64)
    strict = order.strict
    starts = np.ones(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        suffix = rank_arr[i + 1 :]
        mask = suffix > ranks[i] if strict else suffix >= ranks[i]
        if mask.any():
            starts[i] = 1 + starts[i + 1 :][mask].max()
    starts = [int(s) for s in starts]

    def rel(i, j):
        if strict:
            return ranks[j] > ranks[i]
        return ranks[j] >= ranks[i]

    return starts, rel


def patience_chain_length(y: Sequence, order: Order) -> int:
    """Longest chain length by patience sorting; linear oracles only."""
    if not order.is_linear:
        raise LinearityError(f"patience sorting needs a linear oracle, got {order.name}")
    if len(y) == 0:
        raise EmptySequenceError("patience_chain_length needs a non-empty sequence")
    find = bisect.bisect_left if order.strict else bisect.bisect_right
    tails: list = []
    for el in y.items:
        key = order.sort_key(el)
        pos = find(tails, key)
        if pos == len(tails):
            tails.append(key)
        else:
            tails[pos] = key
    return len(tails)


def verify_witness(indices, y: Sequence, order: Order) -> bool:
    """Check a claimed chain witness against the sequence.

    Out-of-range positions raise; a non-increasing index vector or a
    broken link simply yields False.
    """
    idx = list(indices)
    n = len(y)
    for i in idx:
        if not 0 <= i < n:
            raise WitnessIndexError(f"witness index {i} outside sequence of length {n}")
    for a, b in zip(idx, idx[1:]):
        if not a < b:
            return False
    for a, b in zip(idx, idx[1:]):
        if not order.related(y[a], y[b]):
            return False
    return True


def constant_subsequence(y: Sequence) -> tuple[Element, int]:
    """Most frequent value and its multiplicity; ties go to the value
    whose first occurrence is earliest."""
    if len(y) == 0:
        raise EmptySequenceError("constant_subsequence needs a non-empty sequence")
    counts = Counter(y.items)
    best = max(counts.values())
    for el in y.items:
        if counts[el] == best:
            return el, best
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class UPSequence:
    """An eventually periodic sequence: finite prefix plus repeating cycle."""

    prefix: Sequence
    cycle: Sequence

    def __post_init__(self):
        if self.prefix.tag is not self.cycle.tag:
            raise DomainMismatchError("prefix and cycle must share a domain tag")
        if len(self.cycle) == 0:
            raise EmptySequenceError("the cycle of an eventually periodic sequence is non-empty")

    def unroll(self, copies: int) -> Sequence:
        """Prefix followed by the cycle repeated ``copies`` times."""
        return Sequence(self.prefix.tag, self.prefix.items + self.cycle.items * copies)


def parse_up_sequence(text: str, tag: Tag) -> UPSequence:
    """Parse the one-line "prefix | cycle" form; the prefix may be empty."""
    if "|" not in text:
        raise ParseError("eventually periodic input needs the form 'prefix | cycle'")
    left, _, right = text.partition("|")
    return UPSequence(parse_sequence(left, tag), parse_sequence(right, tag))


def decide_membership_up(up: UPSequence, order: Order) -> bool:
    """Whether the infinite unrolling contains an infinite chain.

    Only the cycle matters: an infinite chain must eventually use cycle
    values, and each value it revisits closes a directed cycle in the
    relatedness graph on the distinct cycle values.  Conversely any
    directed cycle can be followed forever since every cycle value
    recurs infinitely often.
    """
    return cycle_witness(up, order) is not None


def cycle_witness(up: UPSequence, order: Order) -> list[Element] | None:
    """A directed cycle in the relatedness graph on cycle values, or None.

    The returned list c_0, ..., c_{k-1} satisfies related(c_i, c_{i+1})
    and related(c_{k-1}, c_0); a self-loop gives a singleton list.
    """
    values: list[Element] = []
    seen = set()
    for el in up.cycle.items:
        if el not in seen:
            seen.add(el)
            values.append(el)
    n = len(values)
    succs = [
        [j for j in range(n) if order.related(values[i], values[j])] for i in range(n)
    ]
    # Prune nodes with no outgoing edge until stable; survivors all have a
    # successor among survivors, so following edges must revisit a node.
    alive = set(range(n))
    changed = True
    while changed:
        changed = False
        for i in list(alive):
            if not any(j in alive for j in succs[i]):
                alive.discard(i)
                changed = True
    if not alive:
        return None
    start = min(alive)
    path = [start]
    position = {start: 0}
    current = start
    while True:
        current = next(j for j in succs[current] if j in alive)
        if current in position:
            cycle = path[position[current] :]
            return [values[i] for i in cycle]
        position[current] = len(path)
        path.append(current)


def format_witness(witness: ChainWitness) -> str:
    idx = " ".join(str(i) for i in witness.indices)
    vals = " ".join(format_element(e) for e in witness.values)
    return f"indices: {idx}\nvalues: {vals}"
