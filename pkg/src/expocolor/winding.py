"""Exact arc-value arithmetic on odd cycles: labels and little paths.

An assignment on the odd cycle C_{2n+1} is a vector of colors, one per
cycle vertex.  Walking the *chord cycle* (the directed tour by steps of
two) and summing a per-arc value Δ produces the assignment's *label*
ℓ_f — a discrete winding number — while the n-arc chord path between
the endpoints of a distinguished edge produces the *little path* value
p_f.  These two integers drive the O(n) coloring routine.

Index convention: cycle vertices are 0-based ids ``0..2n``; writing
``u_i`` for the i-th vertex in 1-based positional notation, ``u_i``
has id ``i-1``.  The shift is confined to this docstring — every public
API here speaks ids.

Two Δ tables exist.  For 3 colors, arcs take values in {-1, 0, +1}
(``delta3``).  For a cycle codomain C_k with odd k >= 5, arcs take
values in {0, ±1/2, ±1} by the color step mod k (``delta_k``), with a
distinguished FAR marker for steps no arc of an adjacent pair can take.
Values are kept exact with :class:`Half` (a doubled integer); floats
never appear.

For cycle codomains, a chord arc whose color step falls outside
{0, 2, k-2} mod k means the assignment has no neighbors at all, so
:func:`label` and :func:`little_path` raise ``IsolatedFunctionError``
rather than return a value there.  The half-step arc values still
matter: they arise when valuing arcs *between* two adjacent assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import IsolatedFunctionError, ParityDomainError


@dataclass(frozen=True, order=True)
class Half:
    """An exact half-integer, stored as twice its value.

    ``Half(doubled=3)`` is 3/2; the value is integral iff ``doubled``
    is even.  Supports addition, negation, and integer scaling — all
    closed and exact.
    """

    doubled: int = 0

    @classmethod
    def from_int(cls, value: int) -> "Half":
        return cls(2 * value)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other: "Half") -> "Half":
        if not isinstance(other, Half):
            return NotImplemented
        return Half(self.doubled + other.doubled)

    def __sub__(self, other: "Half") -> "Half":
        if not isinstance(other, Half):
            return NotImplemented
        return Half(self.doubled - other.doubled)

    def __neg__(self) -> "Half":
        return Half(-self.doubled)

    def __mul__(self, scale: int) -> "Half":
        if not isinstance(scale, int):
            return NotImplemented
        return Half(self.doubled * scale)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


class _Far:
    """Marker for color steps that no arc of an adjacent pair can take."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "FAR"


FAR = _Far()


def delta3(i: int, j: int) -> int:
    """Arc value for 3 colors: +1 on (1,2),(2,3),(3,1), -1 reversed, 0 equal."""
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"colors must be in 1..3, got ({i},{j})")
    return (j - i + 1) % 3 - 1


def delta_k(i: int, j: int, k: int):
    """Arc value for colors on the cycle C_k, odd k >= 5.

    By the residue of j-i mod k: 2 -> +1, k-2 -> -1, 1 -> +1/2,
    k-1 -> -1/2, 0 -> 0; any other residue -> the FAR marker.
    Returns Half or FAR.
    """
    _check_cycle_codomain(k)
    if not (1 <= i <= k and 1 <= j <= k):
        raise ValueError(f"colors must be in 1..{k}, got ({i},{j})")
    r = (j - i) % k
    if r == 0:
        return Half(0)
    if r == 2:
        return Half(2)
    if r == k - 2:
        return Half(-2)
    if r == 1:
        return Half(1)
    if r == k - 1:
        return Half(-1)
    return FAR


def _check_cycle_codomain(k: int) -> None:
    if k == 3:
        raise ParityDomainError(
            "delta_k needs k >= 5; the three-color table is delta3 "
            "(the k=3 residue cases would overlap)"
        )
    if k < 5 or k % 2 == 0:
        raise ParityDomainError(f"codomain cycle length must be odd and >= 5, got {k}")


def arc_value(i: int, j: int, k: int):
    """Δ for any supported codomain, as Half or FAR; dispatches on k."""
    if k == 3:
        return Half.from_int(delta3(i, j))
    return delta_k(i, j, k)


def chord_order(n: int) -> tuple[tuple[int, int], ...]:
    """The arcs of the directed chord cycle of C_{2n+1}, in tour order.

    Starting at id 0, each arc steps +2 mod 2n+1; the tour visits the
    odd positions then the even ones and closes where it began.
    """
    if n < 1:
        raise ParityDomainError(f"n must be >= 1, got {n}")
    length = 2 * n + 1
    return tuple(((2 * t) % length, (2 * t + 2) % length) for t in range(length))


def orient_edge(edge: Iterable[int], n: int) -> tuple[int, int]:
    """Orient a cycle edge {x,y} as (a,b) with an n-arc chord path a -> b.

    Exactly one orientation works: the chord tour advances by 2, so n
    steps from a land on a-1 mod 2n+1, i.e. a must be the cyclic
    successor of b.  The other orientation (an (n+1)-arc path) is never
    exposed.
    """
    if n < 1:
        raise ParityDomainError(f"n must be >= 1, got {n}")
    length = 2 * n + 1
    try:
        x, y = edge
    except (TypeError, ValueError) as exc:
        raise ValueError(f"edge must be a pair, got {edge!r}") from exc
    if not (0 <= x < length and 0 <= y < length) or x == y:
        raise ValueError(f"({x},{y}) is not an edge of a {length}-cycle")
    if x == (y + 1) % length:
        return (x, y)
    if y == (x + 1) % length:
        return (y, x)
    raise ValueError(f"({x},{y}) is not an edge of a {length}-cycle")


@dataclass(frozen=True)
class OddCycleCtx:
    """Everything fixed before coloring: cycle size, codomain, edge, tour.

    ``a``/``b`` are the distinguished edge oriented per
    :func:`orient_edge`; ``chord_order`` is the full arc tour.  Built
    via :meth:`make`; direct construction validates consistency.
    """

    n: int
    k: int
    a: int
    b: int
    chord_order: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParityDomainError(f"n must be >= 1, got {self.n}")
        if self.k < 3 or self.k % 2 == 0:
            raise ParityDomainError(f"codomain size must be odd and >= 3, got {self.k}")
        if orient_edge((self.a, self.b), self.n) != (self.a, self.b):
            raise ValueError(f"(a,b)=({self.a},{self.b}) is not n-arc oriented")
        if self.chord_order != chord_order(self.n):
            raise ValueError("chord_order does not match the canonical tour")

    @classmethod
    def make(cls, n: int, k: int, edge: Iterable[int] | None = None) -> "OddCycleCtx":
        """Context for C_{2n+1} into k colors; edge defaults to {0, 2n}."""
        a, b = orient_edge(edge if edge is not None else (0, 2 * n), n)
        return cls(n=n, k=k, a=a, b=b, chord_order=chord_order(n))

    @property
    def length(self) -> int:
        return 2 * self.n + 1

    @property
    def path_arcs(self) -> tuple[tuple[int, int], ...]:
        """The n arcs of the chord path from a to b."""
        length = self.length
        return tuple(
            ((self.a + 2 * t) % length, (self.a + 2 * t + 2) % length)
            for t in range(self.n)
        )


def _check_assignment(f: Sequence[int], n: int) -> None:
    if n < 1:
        raise ParityDomainError(f"n must be >= 1, got {n}")
    if len(f) != 2 * n + 1:
        raise ValueError(f"assignment has {len(f)} entries, cycle needs {2 * n + 1}")


def fixed_points(f: Sequence[int], n: int) -> frozenset[int]:
    """Ids i whose two cycle neighbors receive different colors under f."""
    _check_assignment(f, n)
    length = 2 * n + 1
    return frozenset(
        i for i in range(length) if f[(i - 1) % length] != f[(i + 1) % length]
    )


def in_even_class(f: Sequence[int], n: int) -> bool:
    """True iff f has an even number of fixed points."""
    return len(fixed_points(f, n)) % 2 == 0


def _check_colors(f: Sequence[int], k: int) -> None:
    for c in f:
        if not 1 <= c <= k:
            raise ValueError(f"color {c} outside 1..{k}")


def _tour_value(f: Sequence[int], arcs: Iterable[tuple[int, int]], ctx: OddCycleCtx) -> Half:
    k = ctx.k
    if k == 3:
        return Half.from_int(sum(delta3(f[u], f[v]) for u, v in arcs))
    doubled = 0
    for u, v in arcs:
        d = delta_k(f[u], f[v], k)
        if d is FAR or d.doubled % 2 != 0:
            raise IsolatedFunctionError(
                f"assignment is isolated: chord arc ({u},{v}) steps by "
                f"{(f[v] - f[u]) % k} mod {k}, outside {{0, 2, {k - 2}}}"
            )
        doubled += d.doubled
    return Half(doubled)


def label(f: Sequence[int], ctx: OddCycleCtx) -> Half:
    """ℓ_f: total arc value of f around the chord cycle."""
    _check_assignment(f, ctx.n)
    _check_colors(f, ctx.k)
    return _tour_value(f, ctx.chord_order, ctx)


def little_path(f: Sequence[int], ctx: OddCycleCtx) -> Half:
    """p_f: total arc value of f along the n-arc chord path from a to b.

    Isolated assignments have no little path: for cycle codomains the
    whole chord tour is screened first, so an impossible step anywhere
    raises even when the a-to-b path itself is clean.
    """
    _check_assignment(f, ctx.n)
    _check_colors(f, ctx.k)
    if ctx.k != 3:
        _tour_value(f, ctx.chord_order, ctx)  # isolation screen only
    return _tour_value(f, ctx.path_arcs, ctx)


# -- vectorized three-color kernels ------------------------------------------
#
# The scalar functions above are the reference; these numpy forms exist for
# the exhaustive sweeps and for the O(n) coloring hot path.  Colors 1..3
# only.  Each works on one assignment (1-d) or a stack of them (2-d).


def np_chord_diffs(fs: np.ndarray) -> np.ndarray:
    """f[i+2] - f[i] per chord arc; fs is (..., length)."""
    return np.roll(fs, -2, axis=-1) - fs


def np_labels3(fs: np.ndarray) -> np.ndarray:
    """Labels of three-color assignments; returns int64, shape fs.shape[:-1]."""
    diffs = np_chord_diffs(np.asarray(fs))
    return ((diffs + 1) % 3 - 1).sum(axis=-1, dtype=np.int64)


def np_fixed_point_counts(fs: np.ndarray) -> np.ndarray:
    """Fixed-point counts: nonzero chord diffs, shape fs.shape[:-1]."""
    return np.count_nonzero(np_chord_diffs(np.asarray(fs)), axis=-1)


def np_little_paths3(fs: np.ndarray, ctx: OddCycleCtx) -> np.ndarray:
    """Little-path values of three-color assignments along ctx's chord path."""
    fs = np.asarray(fs)
    idx = (ctx.a + 2 * np.arange(ctx.n + 1)) % ctx.length
    path = fs[..., idx]
    diffs = path[..., 1:] - path[..., :-1]
    return ((diffs + 1) % 3 - 1).sum(axis=-1, dtype=np.int64)
