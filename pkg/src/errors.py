"""
Domain errors raised by the zero forcing toolkit.

The class names double as the error names echoed by the command line.
"""


class ZeroForcingError(Exception):
    """Base class for every domain error of the package."""


class NotAClutter(ZeroForcingError, ValueError):
    """Some hyperedge is contained in another one."""


class EmptyEdge(ZeroForcingError, ValueError):
    """A hyperedge with no vertices was supplied."""


class VertexOutOfRange(ZeroForcingError, ValueError):
    """A vertex label lies outside 1..n."""


class GroundSetTooLarge(ZeroForcingError, ValueError):
    """The ground set exceeds an exhaustive-enumeration bound."""


class RuleNotApplicable(ZeroForcingError, ValueError):
    """The graph rule R0 was requested on a hypergraph that is not a graph."""


class EmptySet(ZeroForcingError, ValueError):
    """Forcing and immune sets are nonempty by definition."""


class NotAnEdge(ZeroForcingError, ValueError):
    """The given vertex set is not a hyperedge."""


class EmptyMember(ZeroForcingError, ValueError):
    """The transversal of a clutter containing the empty set is undefined."""


class OutOfRange(ZeroForcingError, ValueError):
    """A size parameter k falls outside 1..n."""


class SearchBoundExceeded(ZeroForcingError):
    """Exhaustive subset search was requested above the configured bound."""


class HypergraphFormatError(ZeroForcingError, ValueError):
    """Malformed hypergraph text or JSON input."""


class NotRealizable(ZeroForcingError):
    """No graph realizes the requested uniform clutter."""

    def __init__(self, k, n, kind):
        self.k = k
        self.n = n
        self.kind = kind
        super().__init__(
            f"U_{{{k},Ω}} on |Ω|={n} has no graph-{kind} realization"
        )
