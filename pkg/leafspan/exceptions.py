class LeafSpanException(Exception):
    """Base exception for everything raised by leafspan."""


class InputError(LeafSpanException):
    """The caller handed us something we cannot work with."""


class InvariantBreach(LeafSpanException):
    """A proven inequality or structural fact failed at run time."""


class ExistingEntry(LeafSpanException):
    """An entry was already found in the cache with this key."""


class NonExistentEntry(LeafSpanException):
    """No entry found in the cache with this key."""


class UnknownVertex(InputError):
    """The vertex does not belong to the graph."""


class MissingEdge(InputError):
    """The edge does not belong to the graph."""


class DisconnectedGraph(InputError):
    """The graph is not connected or has fewer than two vertices."""


class NonSimpleGraph(InputError):
    """The graph has a loop or a repeated edge."""


class GraphFormatError(InputError):
    """A graph or tree file could not be parsed."""


class InfeasibleSpec(InputError):
    """A generator was asked for a graph that cannot exist."""


class OracleTooLarge(InputError):
    """The exact oracle would exceed its size cap or candidate budget."""


class ReductionNotApplicable(InvariantBreach):
    """The witnesses of a reduction do not satisfy its preconditions."""


class PathGrowthError(InvariantBreach):
    """The leaf-path construction left its loop invariant."""


class LiftError(InvariantBreach):
    """A lifted tree is not spanning or misses its leaf contract."""


class ProfitBelowBound(InvariantBreach):
    """A growth step gained less potential than its proven lower bound."""


class LedgerMismatch(InvariantBreach):
    """The potential ledger disagrees with a from-scratch recomputation."""


class BaseInvariantError(InvariantBreach):
    """A base forest violates one of its counting inequalities."""


class NoStepApplicable(InvariantBreach):
    """The forest is not a spanning tree yet no growth step applies."""


class ForestShapeError(InvariantBreach):
    """A growing forest lost a structural property its steps rely on."""


class BoundMissed(InvariantBreach):
    """A finished tree has fewer leaves than the guaranteed bound."""
