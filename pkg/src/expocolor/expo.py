"""Exponential graphs: functions as vertices, compatibility as adjacency.

Given a host graph H and k colors, the exponential graph has one vertex
per assignment (function V(H) -> {1..k}) and joins f to g when every
host edge uv maps to a target edge in both directions: f(u) compatible
with g(v) and g(u) compatible with f(v).  Two targets are supported —
the complete graph K_k (compatible = different) and the cycle C_k
(compatible = adjacent on the cycle), selected by ``cycle_target``.

Everything here is exponential in |V(H)| and guarded by explicit caps;
the point is desk-scale ground truth, not scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .errors import CapacityError
from .graphs import CycleWitness, Graph, bipartition

DEFAULT_CAP = 10**6

Assignment = tuple[int, ...]


class ComponentClass(Enum):
    """Classification of a connected component of an exponential graph.

    Loop-free components of K_3^H fall into the first three classes;
    components containing a self-loop (an assignment adjacent to
    itself, i.e. a proper coloring of the host — possible only when
    the host is k-colorable) get the fourth tag and are excluded from
    that trichotomy.
    """

    ISOLATED = "Isolated"
    BIPARTITE = "Bipartite"
    THREE_CHROMATIC = "ThreeChromatic"
    REFLEXIVE_VERTEX = "ReflexiveVertex"


def _check_assignment(h: Graph, f: Sequence[int], k: int) -> None:
    if len(f) != h.vertex_count:
        raise ValueError(
            f"assignment has {len(f)} entries, host has {h.vertex_count} vertices"
        )
    for c in f:
        if not 1 <= c <= k:
            raise ValueError(f"color {c} outside 1..{k}")


def _compatible(x: int, y: int, k: int, cycle_target: bool) -> bool:
    if cycle_target:
        return (x - y) % k in (1, k - 1)
    return x != y


def are_adjacent(
    h: Graph, f: Sequence[int], g: Sequence[int], k: int, cycle_target: bool = False
) -> bool:
    """True iff every host edge uv has f(u)~g(v) and g(u)~f(v) in the target."""
    _check_assignment(h, f, k)
    _check_assignment(h, g, k)
    return all(
        _compatible(f[u], g[v], k, cycle_target) and _compatible(g[u], f[v], k, cycle_target)
        for u, v in h.edges()
    )


def allowed_colors(
    h: Graph, f: Sequence[int], k: int, cycle_target: bool = False
) -> list[tuple[int, ...]]:
    """Per vertex v, the sorted colors compatible with f on every neighbor of v.

    A neighbor g exists iff every entry is nonempty, and the neighbors
    are exactly the Cartesian product of these sets.
    """
    _check_assignment(h, f, k)
    out: list[tuple[int, ...]] = []
    for v in range(h.vertex_count):
        allowed = [
            c
            for c in range(1, k + 1)
            if all(_compatible(c, f[w], k, cycle_target) for w in h.neighbors[v])
        ]
        out.append(tuple(allowed))
    return out


def neighbors(
    h: Graph, f: Sequence[int], k: int, cycle_target: bool = False
) -> Iterator[Assignment]:
    """All g adjacent to f, streamed in lexicographic order."""
    sets = allowed_colors(h, f, k, cycle_target)
    if any(not s for s in sets):
        return
    yield from itertools.product(*sets)


def is_isolated(h: Graph, f: Sequence[int], k: int, cycle_target: bool = False) -> bool:
    """True iff f has no neighbor; polynomial in |h| and k."""
    return any(not s for s in allowed_colors(h, f, k, cycle_target))


@dataclass(frozen=True)
class ExpoGraph:
    """A materialized exponential graph over an explicit assignment list.

    ``vertices`` is duplicate-free and lexicographically sorted, fixing
    the vertex indexing; ``adjacency[i]`` lists neighbor indices
    (sorted, loop-free) and ``loops`` holds the indices of self-adjacent
    assignments.
    """

    host: Graph
    k: int
    cycle_target: bool
    vertices: tuple[Assignment, ...]
    adjacency: tuple[tuple[int, ...], ...]
    loops: frozenset[int]

    def __post_init__(self):
        if len(self.adjacency) != len(self.vertices):
            raise ValueError("adjacency length != vertex count")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be unique and lexicographically sorted")

    @cached_property
    def _index(self) -> Mapping[Assignment, int]:
        return {f: i for i, f in enumerate(self.vertices)}

    def index_of(self, f: Sequence[int]) -> int:
        return self._index[tuple(f)]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def to_graph(self) -> Graph:
        """The loop-free simple graph over vertex indices."""
        return Graph(len(self.vertices), self.adjacency)

    def induce(self, keep: Sequence[int]) -> tuple["ExpoGraph", list[int]]:
        """Sub-exponential-graph on the given vertex indices.

        Returns the induced graph (indices renumbered, lexicographic
        order preserved) and the list mapping new index -> old index.
        """
        old = sorted(set(keep))
        pos = {o: i for i, o in enumerate(old)}
        verts = tuple(self.vertices[o] for o in old)
        adj = tuple(
            tuple(pos[w] for w in self.adjacency[o] if w in pos) for o in old
        )
        loops = frozenset(pos[o] for o in self.loops if o in pos)
        return (
            ExpoGraph(self.host, self.k, self.cycle_target, verts, adj, loops),
            old,
        )


def build_exponential(
    h: Graph, k: int, cap: int = DEFAULT_CAP, cycle_target: bool = False
) -> ExpoGraph:
    """Materialize the full exponential graph on k^|V(h)| assignments.

    Self-loops (assignments adjacent to themselves — proper colorings
    of the host) are recorded in ``loops``, never in ``adjacency``.
    """
    total = k ** h.vertex_count
    if total > cap:
        raise CapacityError(
            f"exponential graph needs {total} vertices, cap is {cap}",
            required=total,
            cap=cap,
        )
    vertices = tuple(itertools.product(range(1, k + 1), repeat=h.vertex_count))
    index = {f: i for i, f in enumerate(vertices)}
    adjacency: list[list[int]] = [[] for _ in range(total)]
    loops = set()
    for i, f in enumerate(vertices):
        for g in neighbors(h, f, k, cycle_target):
            j = index[g]
            if j == i:
                loops.add(i)
            else:
                adjacency[i].append(j)
    return ExpoGraph(
        host=h,
        k=k,
        cycle_target=cycle_target,
        vertices=vertices,
        adjacency=tuple(tuple(a) for a in adjacency),
        loops=frozenset(loops),
    )


def component_of(
    h: Graph,
    f: Sequence[int],
    k: int,
    cap: int = DEFAULT_CAP,
    cycle_target: bool = False,
) -> set[Assignment]:
    """BFS closure of f under adjacency; capacity error past cap vertices."""
    start = tuple(f)
    _check_assignment(h, start, k)
    seen: set[Assignment] = {start}
    frontier = [start]
    while frontier:
        nxt: list[Assignment] = []
        for cur in frontier:
            for g in neighbors(h, cur, k, cycle_target):
                if g not in seen:
                    seen.add(g)
                    if len(seen) > cap:
                        raise CapacityError(
                            f"component exceeds cap {cap}", required=len(seen), cap=cap
                        )
                    nxt.append(g)
        frontier = nxt
    return seen


def classify_component(comp: ExpoGraph) -> ComponentClass:
    """Sort one connected component into the explicit-coloring taxonomy."""
    n = comp.vertex_count
    if n == 0:
        raise ValueError("empty component")
    # connectivity check: BFS over the loop-free edges
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in comp.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    if len(seen) != n:
        raise ValueError(f"input is not connected ({len(seen)} of {n} reachable)")
    if comp.loops:
        return ComponentClass.REFLEXIVE_VERTEX
    if n == 1:
        return ComponentClass.ISOLATED
    if bipartition(comp.to_graph()) is not None:
        return ComponentClass.BIPARTITE
    return ComponentClass.THREE_CHROMATIC


def restrict(h: Graph, f: Sequence[int], cyc: CycleWitness) -> Assignment:
    """Project f onto a cycle of the host, in the witness's vertex order."""
    cyc.validate_in(h)
    if len(f) != h.vertex_count:
        raise ValueError(
            f"assignment has {len(f)} entries, host has {h.vertex_count} vertices"
        )
    return tuple(f[c] for c in cyc.vertices)


def expo_to_json_dict(eg: ExpoGraph) -> dict:
    """Graph-shaped JSON plus a sidecar mapping index -> assignment vector."""
    edges = [
        [i, j] for i in range(eg.vertex_count) for j in eg.adjacency[i] if i < j
    ]
    return {
        "n": eg.vertex_count,
        "edges": edges,
        "loops": sorted(eg.loops),
        "assignments": [list(f) for f in eg.vertices],
        "k": eg.k,
        "cycle_target": eg.cycle_target,
    }
