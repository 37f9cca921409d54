"""Exception types shared across the package."""


class StereographError(Exception):
    """Base class for all package-specific errors."""


class LengthMismatch(StereographError, ValueError):
    """A pattern bit sequence has the wrong length for its pair count."""


class DomainError(StereographError, ValueError):
    """An input value lies outside its permitted domain."""


class NotAStereotypeGraph(StereographError, ValueError):
    """An edge set violates the stereotype-graph definition.

    Carries the first violated clause plus a concrete witness (a pair
    index, a pair of pair indices, or an offending edge list).
    """

    def __init__(self, clause: str, witness: object, message: str):
        super().__init__(message)
        self.clause = clause
        self.witness = witness


class PairAbsent(StereographError, KeyError):
    """A merge referenced a pair index not present in the graph."""


class InvalidOrder(StereographError, ValueError):
    """An explicit merge order referenced a pair not alive at its step."""


class TooLarge(StereographError, ValueError):
    """An exhaustive operation was asked to exceed its configured bound."""


class SizeExceeded(StereographError, ValueError):
    """A polynomial computation was asked to exceed its vertex bound."""


class InvalidColoring(StereographError, ValueError):
    """A supplied coloring is improper, non-optimal, or non-canonical."""


class RangeError(StereographError, ValueError):
    """A requested target value lies outside its legal range."""


class EdgeAbsent(StereographError, KeyError):
    """An edge deletion referenced an edge not present in the graph."""


class ParseError(StereographError, ValueError):
    """Serialized graph input could not be parsed."""


class InternalInvariant(StereographError, RuntimeError):
    """An internal consistency check failed; this always signals a bug."""
