"""Independent brute-force oracles the test suite checks against."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations


def brute_longest_chain(seq, order):
    """Exhaustive longest chain with the lex-least witness.

    Walks index tuples longest-first; within a length, combinations
    yields tuples in lexicographic order, so the first valid one is the
    least.  Only usable for small sequences.
    """
    items = list(seq)
    n = len(items)
    for length in range(n, 0, -1):
        for idx in combinations(range(n), length):
            if all(order.related(items[a], items[b]) for a, b in zip(idx, idx[1:])):
                return length, idx
    raise AssertionError("empty sequence")


def brute_chain_length(seq, order):
    """Exhaustive longest chain length by forward dynamic programming."""
    items = list(seq)
    n = len(items)
    if n == 0:
        raise AssertionError("empty sequence")
    ending = [1] * n
    for i in range(n):
        for j in range(i):
            if order.related(items[j], items[i]) and ending[j] + 1 > ending[i]:
                ending[i] = ending[j] + 1
    return max(ending)


def brute_splitting_depth(elems):
    """Literal between-element recursion, memoised on sorted positions."""
    vals = sorted(Fraction(v) for v in elems)
    if len(vals) < 2:
        return 0

    @lru_cache(maxsize=None)
    def sd(i, j):
        between = range(i + 1, j)
        if not between:
            return 0
        return 1 + max(min(sd(i, c), sd(c, j)) for c in between)

    m = len(vals)
    return max(sd(i, j) for i in range(m) for j in range(i + 1, m))
