"""Exception types shared across the package.

The CLI maps these onto stable exit codes, so the distinctions matter:
bad arguments, exceeded capacity caps, parity-domain rejections, isolated
functions, and internal invariant violations are all different failure
modes with different meanings to a caller.
"""


class CapacityError(Exception):
    """An operation would exceed its configured size cap.

    Exponential-graph constructions grow as ``k ** |V|``; every such
    operation takes a cap and fails loudly instead of thrashing.
    """

    def __init__(self, message: str, required: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class ParityDomainError(ValueError):
    """The assignment has an odd number of fixed points.

    Vertex coloring is only defined on the even-parity class; callers that
    feed an odd-parity assignment get this instead of a bogus color.
    """


class IsolatedFunctionError(ValueError):
    """The assignment is an isolated vertex of the exponential graph.

    For odd-cycle targets this is a legitimate classification outcome
    (some cycle vertex has no compatible color), not a crash.
    """


class NoEvenCycleError(LookupError):
    """No odd cycle with an even number of fixed points was found.

    Cannot happen for a non-isolated assignment on a host with chromatic
    number at least 4; it does happen on bipartite hosts (no odd cycles at
    all) or when the length bound is too small.
    """


class InvariantViolationError(RuntimeError):
    """An internal mathematical invariant failed.

    Raised from branches that correctness arguments make unreachable, e.g.
    the little-path value landing exactly on half the label. Seeing this
    means the arithmetic is corrupted, not that the input was bad.
    """
