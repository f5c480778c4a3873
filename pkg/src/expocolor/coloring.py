"""Coloring algorithms: the O(n) per-vertex routine and its rivals.

Three layers live here, mirroring how the math composes:

* ``color_vertex`` / ``color_vertex_ck`` — color one even-class
  assignment on an odd cycle in O(n) arithmetic, by comparing the
  little-path value p_f against half the label ℓ_f.  The comparison is
  exact (doubled integers) and its two strict outcomes decide between
  the endpoint colors f(a) and f(b); equality is provably unreachable
  and raises loudly if it ever fires.

* ``color_graph_baseline`` — the exponential contrast: materialize the
  whole even class, color the f(a)=f(b) assignments directly (they hit
  every odd cycle), and 2-color the bipartite remainder.

* ``find_even_cycle`` / ``color_in_kh`` — the general-host pipeline:
  pick an odd cycle of H on which the assignment has an even number of
  fixed points, restrict, and color the restriction.  Cycles already
  used are retried first, in insertion order, via an explicit
  ``CycleCache`` value threaded through calls.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import (
    InvariantViolationError,
    IsolatedFunctionError,
    NoEvenCycleError,
    ParityDomainError,
)
from .expo import ExpoGraph, build_exponential, is_isolated, restrict
from .graphs import CycleWitness, Graph, bipartition, make_cycle, odd_cycle_in, odd_cycles
from .winding import (
    Half,
    OddCycleCtx,
    fixed_points,
    in_even_class,
    label,
    little_path,
    np_chord_diffs,
    np_little_paths3,
)


class Branch(Enum):
    """Which rule of the per-vertex routine produced the color."""

    EQUAL_ENDPOINTS = "EqualEndpoints"
    BELOW_HALF = "BelowHalf"
    ABOVE_HALF = "AboveHalf"


@dataclass(frozen=True)
class ColorVerdict:
    """A color plus the exact certificate that justifies it.

    ``ell`` and ``p`` are the label and little-path values; the branch
    records whether the endpoints agreed or which side of ell/2 the
    little path fell on.
    """

    color: int
    branch: Branch
    ell: Half
    p: Half

    def to_json_dict(self) -> dict:
        return {
            "color": self.color,
            "branch": self.branch.value,
            "ell2": self.ell.doubled,
            "p2": self.p.doubled,
        }


def _side_of(p2: int, ell2: int) -> int:
    """Which side of ell/2 the little path falls on: -1 below, +1 above.

    Arguments are doubled values (p2 = 2p, ell2 = 2l); the exact test
    is sign(2*p2 - ell2), since p - l/2 and 2*p2 - ell2 share a sign.
    """
    d = 2 * p2 - ell2
    if d < 0:
        return -1
    if d > 0:
        return 1
    return 0


def _branch_verdict(fa: int, fb: int, ell2: int, p2: int) -> ColorVerdict:
    if fa == fb:
        return ColorVerdict(fa, Branch.EQUAL_ENDPOINTS, Half(ell2), Half(p2))
    side = _side_of(p2, ell2)
    if side < 0:
        return ColorVerdict(fa, Branch.BELOW_HALF, Half(ell2), Half(p2))
    if side > 0:
        return ColorVerdict(fb, Branch.ABOVE_HALF, Half(ell2), Half(p2))
    raise InvariantViolationError(
        f"little path equals half the label (p2={p2}, ell2={ell2}); "
        "this is unreachable for even-class assignments"
    )


def color_vertex(f: Sequence[int], ctx: OddCycleCtx) -> ColorVerdict:
    """Color one even-class three-color assignment in O(n).

    Checks membership (even fixed-point count) on every call; use
    :func:`color_vertex_unchecked` to skip validation in hot loops.
    """
    if ctx.k != 3:
        raise ValueError(f"three-color routine got k={ctx.k}; use color_vertex_ck")
    arr = np.asarray(f)
    if arr.ndim != 1 or arr.shape[0] != ctx.length:
        raise ValueError(f"assignment must have {ctx.length} entries")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"colors must be integers, got dtype {arr.dtype}")
    if ((arr < 1) | (arr > 3)).any():
        raise ValueError("colors must be in 1..3")
    diffs = np_chord_diffs(arr)
    fp_count = int(np.count_nonzero(diffs))
    if fp_count % 2 != 0:
        raise ParityDomainError(
            f"assignment has {fp_count} fixed points (odd); "
            "only the even class is colorable this way"
        )
    return _verdict3(arr, ctx, diffs)


def color_vertex_unchecked(f: Sequence[int], ctx: OddCycleCtx) -> ColorVerdict:
    """color_vertex minus the domain checks: trusts an even-class input."""
    if ctx.k != 3:
        raise ValueError(f"three-color routine got k={ctx.k}; use color_vertex_ck")
    arr = np.asarray(f)
    return _verdict3(arr, ctx, np_chord_diffs(arr))


def _verdict3(arr: np.ndarray, ctx: OddCycleCtx, diffs: np.ndarray) -> ColorVerdict:
    ell2 = 2 * int(((diffs + 1) % 3 - 1).sum(dtype=np.int64))
    p2 = 2 * int(np_little_paths3(arr, ctx))
    return _branch_verdict(int(arr[ctx.a]), int(arr[ctx.b]), ell2, p2)


def color_vertex_ck(f: Sequence[int], ctx: OddCycleCtx) -> ColorVerdict:
    """Color one even-class assignment into the cycle C_k, odd k >= 5.

    Same decision rule as :func:`color_vertex` in exact Half
    arithmetic; isolated assignments (an impossible chord step) are
    rejected before the parity check.
    """
    if ctx.k < 5:
        raise ValueError(f"cycle-codomain routine got k={ctx.k}; use color_vertex")
    ell = label(f, ctx)  # raises IsolatedFunctionError on impossible steps
    p = little_path(f, ctx)
    fp_count = len(fixed_points(f, ctx.n))
    if fp_count % 2 != 0:
        raise ParityDomainError(
            f"assignment has {fp_count} fixed points (odd); "
            "only the even class is colorable this way"
        )
    return _branch_verdict(f[ctx.a], f[ctx.b], ell.doubled, p.doubled)


def even_class_subgraph(n: int, cap: int = 10**6) -> ExpoGraph:
    """The exponential graph over C_{2n+1} induced on even-parity assignments."""
    h = make_cycle(2 * n + 1)
    eg = build_exponential(h, 3, cap=cap)
    keep = [i for i, f in enumerate(eg.vertices) if in_even_class(f, n)]
    sub, _ = eg.induce(keep)
    if sub.loops:
        raise InvariantViolationError(
            "even-class subgraph contains a self-loop; proper colorings "
            "of an odd cycle must have odd parity"
        )
    return sub


def color_graph_baseline(ke: ExpoGraph, ctx: OddCycleCtx) -> dict[tuple[int, ...], int]:
    """Exponential-time coloring of the whole even class at once.

    The assignments with f(a) = f(b) take color f(a); they hit every
    odd cycle, so the rest is bipartite and its two sides take f(a)
    and f(b) respectively.  Proper by construction; the bipartition
    step is where the exponential cost lives.
    """
    if ke.k != 3 or ke.cycle_target:
        raise ValueError("baseline expects a three-color exponential graph")
    if ctx.k != 3:
        raise ValueError(f"baseline needs a k=3 context, got k={ctx.k}")
    host = ke.host
    if host.vertex_count != ctx.length or host.edge_count != ctx.length:
        raise ValueError("host is not the odd cycle the context describes")
    for i in range(ctx.length):
        if not host.has_edge(i, (i + 1) % ctx.length):
            raise ValueError("host is not the odd cycle the context describes")
    for f in ke.vertices:
        if not in_even_class(f, ctx.n):
            raise ValueError(f"assignment {f} has odd parity; not an even-class graph")

    colors: dict[tuple[int, ...], int] = {}
    rest: list[int] = []
    for i, f in enumerate(ke.vertices):
        if f[ctx.a] == f[ctx.b]:
            colors[f] = f[ctx.a]
        else:
            rest.append(i)
    sub, _ = ke.induce(rest)
    parts = bipartition(sub.to_graph())
    if parts is None:
        raise InvariantViolationError(
            "remaining even-class subgraph is not bipartite; the "
            "equal-endpoint assignments failed to hit every odd cycle"
        )
    side_a, side_b = parts
    for i in side_a:
        f = sub.vertices[i]
        colors[f] = f[ctx.a]
    for i in side_b:
        f = sub.vertices[i]
        colors[f] = f[ctx.b]
    return colors


# -- general hosts ------------------------------------------------------------


def find_even_cycle(h: Graph, f: Sequence[int], max_len: int | None = None) -> CycleWitness:
    """An odd cycle of h on which f has an even number of fixed points.

    Fast path: split V(h) into the vertices colored {1,2} and those
    colored {3}; an odd cycle inside either part sees at most two
    distinct colors, and around any single-tour traversal a two-valued
    sequence changes an even number of times, so its restriction parity
    is even.  Fallback: enumerate odd cycles up to max_len and test
    parity directly.
    """
    if len(f) != h.vertex_count:
        raise ValueError(
            f"assignment has {len(f)} entries, host has {h.vertex_count} vertices"
        )
    for c in f:
        if not 1 <= c <= 3:
            raise ValueError(f"color {c} outside 1..3")
    if is_isolated(h, f, 3):
        raise IsolatedFunctionError("assignment is isolated; no cycle choice can help")
    if max_len is None:
        max_len = h.vertex_count
    if max_len < 3:
        raise ValueError(f"max_len must be >= 3, got {max_len}")

    for color_class in ((1, 2), (3,)):
        keep = [v for v in range(h.vertex_count) if f[v] in color_class]
        sub, old = h.induced(keep)
        found = odd_cycle_in(sub)
        if found is not None and len(found) <= max_len:
            cyc = CycleWitness.canonical([old[v] for v in found.vertices])
            if not in_even_class(restrict(h, f, cyc), len(cyc) // 2):
                raise InvariantViolationError(
                    f"two-colored cycle {cyc.vertices} has odd parity"
                )
            return cyc

    for cyc in odd_cycles(h, max_len):
        if in_even_class(restrict(h, f, cyc), len(cyc) // 2):
            return cyc
    raise NoEvenCycleError(
        f"no odd cycle of length <= {max_len} carries an even number of fixed points"
    )


@dataclass
class CycleCache:
    """Odd cycles already used for coloring, in first-use order.

    Each entry pairs a cycle witness with the context fixing its chord
    orientation and distinguished edge (always the edge closing the
    witness order).  Reusing cached cycles in insertion order is what
    makes the general-host pipeline input-sensitive rather than
    per-call-linear.
    """

    entries: list[tuple[CycleWitness, OddCycleCtx]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def append(self, cyc: CycleWitness) -> tuple[CycleWitness, OddCycleCtx]:
        if any(existing == cyc for existing, _ in self.entries):
            raise ValueError(f"cycle {cyc.vertices} already cached")
        ctx = OddCycleCtx.make(n=len(cyc) // 2, k=3)
        entry = (cyc, ctx)
        self.entries.append(entry)
        return entry

    def find_even(
        self, h: Graph, f: Sequence[int]
    ) -> tuple[CycleWitness, OddCycleCtx] | None:
        """First cached cycle (insertion order) with even parity under f."""
        for cyc, ctx in self.entries:
            if in_even_class(restrict(h, f, cyc), ctx.n):
                return (cyc, ctx)
        return None

    def to_json_dict(self) -> dict:
        return {"cycles": [list(cyc.vertices) for cyc, _ in self.entries]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "CycleCache":
        cache = cls()
        try:
            cycles = d["cycles"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed cycle-cache JSON: {exc}") from exc
        for vs in cycles:
            cache.append(CycleWitness(tuple(int(v) for v in vs)))
        return cache

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def loads(cls, text: str) -> "CycleCache":
        return cls.from_json_dict(json.loads(text))


def color_in_kh(
    h: Graph, f: Sequence[int], cache: CycleCache | None = None
) -> tuple[ColorVerdict, CycleCache]:
    """Color a non-isolated assignment on an arbitrary host.

    Scans the cache in insertion order for a cycle with even parity
    under f, searching for (and caching) a fresh one only on miss; then
    colors the restriction of f to that cycle.  Returns the verdict and
    the same cache, possibly extended.  Appends must be serialized if a
    cache is shared across workers; reads may race.
    """
    if cache is None:
        cache = CycleCache()
    if is_isolated(h, f, 3):
        raise IsolatedFunctionError("assignment is isolated; it needs no color")
    entry = cache.find_even(h, f)
    if entry is None:
        entry = cache.append(find_even_cycle(h, f))
    cyc, ctx = entry
    verdict = color_vertex(restrict(h, f, cyc), ctx)
    return verdict, cache
