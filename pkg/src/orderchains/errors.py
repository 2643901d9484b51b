"""Typed errors shared across the package."""


class OrderChainsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(OrderChainsError):
    """A textual token could not be parsed for the requested domain."""


class DomainMismatchError(OrderChainsError):
    """An element was passed to an oracle or map outside its domain."""


class EmptySequenceError(OrderChainsError):
    """An operation that needs at least one term received an empty sequence."""


class WitnessIndexError(OrderChainsError):
    """A witness refers to positions outside the sequence."""


class LinearityError(OrderChainsError):
    """An operation that requires a linear order received a partial one."""


class ArgumentOrderError(OrderChainsError):
    """Arguments were given in the wrong relative order (a must precede b)."""


class DuplicateElementError(OrderChainsError):
    """An operation that needs pairwise distinct elements saw a repeat."""


class TreePrefixError(OrderChainsError):
    """A node set is not closed under prefixes."""

    def __init__(self, node, missing):
        self.node = node
        self.missing = missing
        super().__init__(f"node {node!r} present but prefix {missing!r} missing")


class SchemeError(OrderChainsError):
    """An interval scheme could not be built at the requested resolution."""

    def __init__(self, message, sigma=None):
        self.sigma = sigma
        super().__init__(message)


class StreamError(OrderChainsError):
    """A countable-set stream broke its contract (range, injectivity, length)."""


class SearchBudgetError(OrderChainsError):
    """A budgeted search ran out of stream elements before succeeding."""
