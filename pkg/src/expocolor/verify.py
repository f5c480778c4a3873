"""Brute-force verification of the coloring machinery at desk scale.

Every verifier exhaustively (or, for large hosts, by seeded sampling)
checks one family of facts the fast algorithms rely on, and returns a
:class:`VerificationReport` whose ``violations`` list is empty exactly
on success.  Counts of checked objects are part of the report so tests
can compare them against closed-form enumeration sizes.

The verifiers re-derive all arc values through the live module
attributes of :mod:`.winding` (tables are rebuilt per call) and color
through :mod:`.coloring`'s public entry points, so corrupting a Δ table
or the side comparison in a test measurably breaks the reports —
mutation-style self-tests assert exactly that.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import coloring, winding
from .errors import (
    CapacityError,
    InvariantViolationError,
    IsolatedFunctionError,
    NoEvenCycleError,
    ParityDomainError,
)
from .expo import (
    ComponentClass,
    ExpoGraph,
    allowed_colors,
    classify_component,
    is_isolated,
    neighbors,
    restrict,
)
from .graphs import (
    CHROMATIC_HARD_CAP,
    Graph,
    bipartition,
    chromatic_number_exact,
    make_cycle,
    odd_cycles,
)
from .winding import OddCycleCtx, in_even_class

DEFAULT_CAP = 10**6
_KEEP_VIOLATIONS = 50


@dataclass
class VerificationReport:
    """Outcome of one verifier run: what was claimed, checked, and found."""

    statement: str
    params: dict
    checked: int
    violations: list[str]
    wall_time: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "violations": list(self.violations),
            "wall_time": self.wall_time,
            "details": self.details,
        }


class _Tally:
    """Violation collector that keeps a readable prefix but counts all."""

    def __init__(self, keep: int = _KEEP_VIOLATIONS):
        self.items: list[str] = []
        self.total = 0
        self._keep = keep

    def add(self, msg: str) -> None:
        self.total += 1
        if len(self.items) < self._keep:
            self.items.append(msg)

    def finish(self, details: dict) -> list[str]:
        if self.total > len(self.items):
            details["violations_truncated"] = True
            details["violation_total"] = self.total
        return self.items


def _delta3_table() -> np.ndarray:
    """4x4 table of delta3 over colors 1..3 (row/col 0 unused).

    Rebuilt from the live function on every call, so monkeypatched
    tables flow into every vectorized sweep.
    """
    tab = np.zeros((4, 4), dtype=np.int64)
    for i in range(1, 4):
        for j in range(1, 4):
            tab[i, j] = winding.delta3(i, j)
    return tab


def _delta_k_table(k: int) -> np.ndarray:
    """(k+1)x(k+1) table of doubled delta_k values; impossible steps are 0.

    Callers must only gather cells they know are not FAR (chord arcs of
    non-isolated assignments, arcs between adjacent assignments).
    """
    tab = np.zeros((k + 1, k + 1), dtype=np.int64)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            d = winding.delta_k(i, j, k)
            if d is not winding.FAR:
                tab[i, j] = d.doubled
    return tab


def _assignments_array(length: int, k: int) -> np.ndarray:
    rows = list(itertools.product(range(1, k + 1), repeat=length))
    return np.array(rows, dtype=np.int8)


def _arc_indices(arcs) -> tuple[np.ndarray, np.ndarray]:
    xs = np.array([u for u, _ in arcs])
    zs = np.array([v for _, v in arcs])
    return xs, zs


def _check_cap(length: int, k: int, cap: int) -> int:
    total = k**length
    if total > cap:
        raise CapacityError(
            f"sweep needs {total} assignments, cap is {cap}", required=total, cap=cap
        )
    return total


def verify_label_congruences(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Three facts over the full three-color assignment space:

    labels are multiples of 3; assignments with distinct endpoint
    colors have little paths that are not; and label parity equals
    fixed-point parity (the bridge between arithmetic and the even
    class).
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, 3)
    total = _check_cap(ctx.length, 3, cap)
    fs = _assignments_array(ctx.length, 3)
    tab = _delta3_table()
    xs_c, zs_c = _arc_indices(ctx.chord_order)
    xs_p, zs_p = _arc_indices(ctx.path_arcs)

    labels = tab[fs[:, xs_c], fs[:, zs_c]].sum(axis=1)
    paths = tab[fs[:, xs_p], fs[:, zs_p]].sum(axis=1)
    fp_counts = (fs[:, xs_c] != fs[:, zs_c]).sum(axis=1)
    distinct_ends = fs[:, ctx.a] != fs[:, ctx.b]

    viol = _Tally()
    for i in np.nonzero(labels % 3 != 0)[0]:
        viol.add(f"label {labels[i]} not divisible by 3 for f={tuple(fs[i])}")
    for i in np.nonzero(distinct_ends & (paths % 3 == 0))[0]:
        viol.add(f"little path {paths[i]} divisible by 3 for f={tuple(fs[i])}")
    for i in np.nonzero(labels % 2 != fp_counts % 2)[0]:
        viol.add(
            f"label parity {labels[i] % 2} != fixed-point parity "
            f"{fp_counts[i] % 2} for f={tuple(fs[i])}"
        )

    details = {
        "distinct_endpoint_count": int(distinct_ends.sum()),
        "even_class_size": int((fp_counts % 2 == 0).sum()),
    }
    return VerificationReport(
        statement="label congruences",
        params={"n": n, "k": 3},
        checked=total,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def _adjacent_pair_sweep(n: int, k: int, cap: int):
    """Yield (f_row, neighbor_matrix) for every assignment with neighbors.

    The neighbor matrix enumerates exactly the adjacent assignments
    (including f itself when it is self-adjacent), in lexicographic
    order, so iterating f over the whole space touches every ordered
    adjacent pair once.
    """
    length = 2 * n + 1
    _check_cap(length, k, cap)
    h = make_cycle(length)
    cycle_target = k >= 5
    for f in itertools.product(range(1, k + 1), repeat=length):
        gs = list(neighbors(h, f, k, cycle_target))
        if not gs:
            continue
        yield np.array(f, dtype=np.int8), np.array(gs, dtype=np.int8)


def verify_chord_step_identity(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Each chord arc of f is determined by the two interleaved arcs
    through any adjacent g: 2*Δ(f_x, f_z) + Δ(f_x, g_y) + Δ(g_y, f_z) = 0
    where y is the cycle vertex between x and z.
    """
    t0 = time.perf_counter()
    length = 2 * n + 1
    tab = _delta3_table()
    viol = _Tally()
    pairs = 0
    for f, gs in _adjacent_pair_sweep(n, 3, cap):
        pairs += gs.shape[0]
        for x in range(length):
            y = (x + 1) % length
            z = (x + 2) % length
            lhs = 2 * tab[f[x], f[z]]
            residual = lhs + tab[f[x], gs[:, y]] + tab[gs[:, y], f[z]]
            for row in np.nonzero(residual != 0)[0]:
                viol.add(
                    f"arc ({x},{z}) of f={tuple(f)} breaks the identity "
                    f"against g={tuple(gs[row])} (residual {residual[row]})"
                )
    details: dict = {}
    return VerificationReport(
        statement="chord-step identity",
        params={"n": n, "k": 3},
        checked=pairs,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def _interleaved_value(
    f: np.ndarray, gs: np.ndarray, tab: np.ndarray, length: int
) -> np.ndarray:
    """Total arc value of the interleaved tour f_1,g_2,f_3,...,g_1,f_2,...

    Equals sum_i Δ(f(u_i), g(u_{i+1})) + sum_i Δ(g(u_i), f(u_{i+1})),
    vectorized over the rows of gs.
    """
    total = np.zeros(gs.shape[0], dtype=np.int64)
    for i in range(length):
        j = (i + 1) % length
        total += tab[f[i], gs[:, j]] + tab[gs[:, i], f[j]]
    return total


def verify_label_invariance(n: int, k: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Adjacent assignments share one label, equal to the value of the
    interleaved two-assignment tour (halved and negated for 3 colors).

    For cycle codomains additionally checks that labels of non-isolated
    assignments are integers divisible by k.
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, k)
    length = ctx.length
    tab = _delta3_table() if k == 3 else _delta_k_table(k)
    xs_c, zs_c = _arc_indices(ctx.chord_order)
    viol = _Tally()
    pairs = 0
    for f, gs in _adjacent_pair_sweep(n, k, cap):
        pairs += gs.shape[0]
        lab_f = int(tab[f[xs_c], f[zs_c]].sum())
        lab_gs = tab[gs[:, xs_c], gs[:, zs_c]].sum(axis=1)
        inter = _interleaved_value(f, gs, tab, length)
        for row in np.nonzero(lab_gs != lab_f)[0]:
            viol.add(
                f"labels differ: {lab_f} for f={tuple(f)} vs "
                f"{lab_gs[row]} for g={tuple(gs[row])}"
            )
        if k == 3:
            bad = np.nonzero(2 * lab_f != -inter)[0]
        else:
            bad = np.nonzero(lab_f != inter)[0]
        for row in bad:
            viol.add(
                f"interleaved tour value {inter[row]} does not determine "
                f"label {lab_f} for f={tuple(f)}, g={tuple(gs[row])}"
            )
        if k >= 5:
            # doubled representation: integrality and divisibility by k
            if lab_f % 2 != 0 or (lab_f // 2) % k != 0:
                viol.add(f"label {lab_f}/2 of non-isolated f={tuple(f)} not in k*Z")
    details: dict = {}
    return VerificationReport(
        statement="label invariance",
        params={"n": n, "k": k},
        checked=pairs,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def verify_little_path_bound(n: int, k: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """For adjacent assignments, p_f + p_g lands within 1 of the shared
    label; the report records the distribution over {-1, 0, +1}.
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, k)
    tab = _delta3_table() if k == 3 else _delta_k_table(k)
    factor = 2 if k == 3 else 1  # brings table sums to doubled values
    xs_c, zs_c = _arc_indices(ctx.chord_order)
    xs_p, zs_p = _arc_indices(ctx.path_arcs)
    viol = _Tally()
    pairs = 0
    hist = {-1: 0, 0: 0, 1: 0}
    for f, gs in _adjacent_pair_sweep(n, k, cap):
        pairs += gs.shape[0]
        lab2 = factor * int(tab[f[xs_c], f[zs_c]].sum())
        lab2_gs = factor * tab[gs[:, xs_c], gs[:, zs_c]].sum(axis=1)
        pf2 = factor * int(tab[f[xs_p], f[zs_p]].sum())
        pg2 = factor * tab[gs[:, xs_p], gs[:, zs_p]].sum(axis=1)
        for row in np.nonzero(lab2_gs != lab2)[0]:
            viol.add(
                f"labels differ under f={tuple(f)}, g={tuple(gs[row])}; "
                "bound precondition broken"
            )
        diff2 = pf2 + pg2 - lab2
        for row in np.nonzero(np.abs(diff2) > 2)[0]:
            viol.add(
                f"p_f + p_g strays {diff2[row]}/2 from the label for "
                f"f={tuple(f)}, g={tuple(gs[row])}"
            )
        for d in diff2:
            if abs(int(d)) <= 2 and int(d) % 2 == 0:
                hist[int(d) // 2] += 1
    details = {"offset_distribution": {str(key): val for key, val in hist.items()}}
    return VerificationReport(
        statement="little-path bound",
        params={"n": n, "k": k},
        checked=pairs,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def verify_proper_coloring_k3(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Color every even-class assignment on an odd cycle and cross-examine pairs.

    Exhausts the whole assignment space of the cycle with ``2 * n + 1``
    vertices.  Checks, for the three-color codomain:

    * every even-class assignment gets a color without the decision
      procedure ever reaching the impossible ``2p == l`` branch;
    * adjacent even-class assignments always receive different colors;
    * adjacency never leaves the even class;
    * when both members of an adjacent pair have distinct edge endpoints,
      the two sit on opposite sides of ``l/2`` (their branches differ).
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, 3)
    length = ctx.length
    _check_cap(length, 3, cap)
    host = make_cycle(length)
    viol = _Tally()
    verdicts: dict[tuple, coloring.ColorVerdict] = {}
    even_count = 0
    branch_hist = {branch.value: 0 for branch in coloring.Branch}
    for f in itertools.product((1, 2, 3), repeat=length):
        if not in_even_class(f, n):
            continue
        even_count += 1
        try:
            verdict = coloring.color_vertex(f, ctx)
        except (InvariantViolationError, ParityDomainError) as exc:
            viol.add(f"coloring failed for f={f}: {exc}")
            continue
        verdicts[f] = verdict
        branch_hist[verdict.branch.value] += 1
    pairs = 0
    for f, verdict in verdicts.items():
        for g in neighbors(host, f, 3):
            partner = verdicts.get(g)
            if partner is None:
                viol.add(
                    f"adjacency leaves the even class: f={f} borders g={g}"
                )
                continue
            pairs += 1
            if partner.color == verdict.color:
                viol.add(f"adjacent pair colored alike: f={f}, g={g}")
            if (
                verdict.branch is not coloring.Branch.EQUAL_ENDPOINTS
                and partner.branch is not coloring.Branch.EQUAL_ENDPOINTS
                and partner.branch is verdict.branch
            ):
                viol.add(
                    f"distinct-endpoint neighbors on the same side of l/2: "
                    f"f={f}, g={g} both {verdict.branch.value}"
                )
    details = {
        "even_class_size": even_count,
        "colored": len(verdicts),
        "branch_histogram": branch_hist,
        "pairs": pairs,
    }
    return VerificationReport(
        statement="per-vertex coloring (3 colors)",
        params={"n": n},
        checked=pairs,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def verify_proper_ck(n: int, k: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check isolation detection and coloring for a cycle codomain.

    Sweeps every assignment ``V(C_{2n+1}) -> {1..k}`` for odd ``k >= 5``
    and verifies that three independent isolation tests agree: the
    brute-force neighbor count, the per-vertex allowed-set test, and the
    arc-residue test performed by label arithmetic.  Every non-isolated
    even-class assignment is then colored, and every adjacent pair of
    such assignments must receive colors that are themselves adjacent on
    the ``k``-cycle.
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, k)
    length = ctx.length
    total = _check_cap(length, k, cap)
    host = make_cycle(length)
    edges = host.edges()
    rows = _assignments_array(length, k)
    xs_c, zs_c = _arc_indices(ctx.chord_order)
    even_mask = ((rows[:, xs_c] != rows[:, zs_c]).sum(axis=1) % 2) == 0
    compat = np.zeros((k + 1, k + 1), dtype=bool)
    for x in range(1, k + 1):
        compat[x, (x % k) + 1] = True
        compat[x, ((x - 2) % k) + 1] = True
    viol = _Tally()
    neighbor_rows: dict[int, np.ndarray] = {}
    isolated = 0
    for i in range(total):
        f_arr = rows[i]
        f = tuple(int(c) for c in f_arr)
        mask = np.ones(total, dtype=bool)
        for u, v in edges:
            mask &= compat[f_arr[u], rows[:, v]]
            mask &= compat[f_arr[v], rows[:, u]]
        brute_iso = not mask.any()
        fast_iso = is_isolated(host, f, k, cycle_target=True)
        try:
            winding.label(f, ctx)
            residue_iso = False
        except IsolatedFunctionError:
            residue_iso = True
        if brute_iso != fast_iso or brute_iso != residue_iso:
            viol.add(
                f"isolation tests disagree for f={f}: brute={brute_iso}, "
                f"allowed-set={fast_iso}, arc-residue={residue_iso}"
            )
        if brute_iso:
            isolated += 1
        elif even_mask[i]:
            neighbor_rows[i] = np.nonzero(mask)[0]
    colors: dict[int, int] = {}
    for i in neighbor_rows:
        f = tuple(int(c) for c in rows[i])
        try:
            colors[i] = coloring.color_vertex_ck(f, ctx).color
        except (
            IsolatedFunctionError,
            ParityDomainError,
            InvariantViolationError,
        ) as exc:
            viol.add(f"coloring failed for f={f}: {exc}")
    pairs = 0
    for i, partners in neighbor_rows.items():
        ci = colors.get(i)
        if ci is None:
            continue
        for j in partners:
            j = int(j)
            if not even_mask[j]:
                viol.add(
                    "adjacency leaves the even class: "
                    f"f={tuple(int(c) for c in rows[i])} borders "
                    f"g={tuple(int(c) for c in rows[j])}"
                )
                continue
            cj = colors.get(j)
            if cj is None:
                continue
            pairs += 1
            if (ci - cj) % k not in (1, k - 1):
                viol.add(
                    f"pair colors {ci}, {cj} are not adjacent on the "
                    f"{k}-cycle: f={tuple(int(c) for c in rows[i])}, "
                    f"g={tuple(int(c) for c in rows[j])}"
                )
    details = {
        "isolated": isolated,
        "even_nonisolated": len(neighbor_rows),
        "pairs": pairs,
    }
    return VerificationReport(
        statement="per-vertex coloring (cycle codomain)",
        params={"n": n, "k": k},
        checked=total,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def verify_hitting_set(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check that equal-endpoint assignments hit every odd structure.

    Builds the even-class subgraph for the cycle with ``2 * n + 1``
    vertices, removes the assignments whose two edge-endpoint values
    coincide, and verifies the remainder is bipartite with the two sides
    given exactly by the below/above branch of the coloring decision.
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, 3)
    length = ctx.length
    _check_cap(length, 3, cap)
    ke = coloring.even_class_subgraph(n, cap=cap)
    viol = _Tally()
    expected = {
        f
        for f in itertools.product((1, 2, 3), repeat=length)
        if f[ctx.a] != f[ctx.b] and in_even_class(f, n)
    }
    keep = [
        i for i, f in enumerate(ke.vertices) if f[ctx.a] != f[ctx.b]
    ]
    remainder, _ = ke.induce(keep)
    if set(remainder.vertices) != expected:
        viol.add(
            "remainder vertex set mismatch: got "
            f"{remainder.vertex_count}, expected {len(expected)}"
        )
    parts = bipartition(remainder.to_graph())
    if parts is None:
        viol.add(
            "remainder after deleting equal-endpoint assignments "
            "contains an odd cycle"
        )
    sides: dict[tuple, coloring.Branch] = {}
    for f in remainder.vertices:
        verdict = coloring.color_vertex(f, ctx)
        if verdict.branch is coloring.Branch.EQUAL_ENDPOINTS:
            viol.add(f"equal-endpoint branch inside the remainder: f={f}")
            continue
        sides[f] = verdict.branch
    edge_checks = 0
    for i in range(remainder.vertex_count):
        fi = remainder.vertices[i]
        for j in remainder.adjacency[i]:
            if j <= i:
                continue
            fj = remainder.vertices[j]
            edge_checks += 1
            if sides.get(fi) is sides.get(fj):
                viol.add(
                    f"remainder edge within one side of l/2: {fi} -- {fj} "
                    f"both {sides.get(fi)}"
                )
    details = {
        "even_class_size": ke.vertex_count,
        "remainder_size": remainder.vertex_count,
        "remainder_edges": edge_checks,
        "even_class_bipartite": bipartition(ke.to_graph()) is not None,
    }
    if ke.vertex_count <= CHROMATIC_HARD_CAP:
        details["even_class_chi"] = chromatic_number_exact(ke.to_graph())
    return VerificationReport(
        statement="hitting set / bipartite remainder",
        params={"n": n},
        checked=remainder.vertex_count + edge_checks,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def verify_baseline(n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check the bipartition-based coloring of the even-class subgraph.

    The baseline colors the whole even-class subgraph at once (equal
    endpoints keep their endpoint value, the remainder is two-colored by
    a bipartition sweep).  The result must be a proper coloring, and on
    equal-endpoint assignments it must agree with the per-vertex
    procedure.
    """
    t0 = time.perf_counter()
    ctx = OddCycleCtx.make(n, 3)
    _check_cap(ctx.length, 3, cap)
    ke = coloring.even_class_subgraph(n, cap=cap)
    viol = _Tally()
    checked = ke.vertex_count
    try:
        assigned = coloring.color_graph_baseline(ke, ctx)
    except InvariantViolationError as exc:
        viol.add(f"baseline coloring failed outright: {exc}")
        details = {"even_class_size": ke.vertex_count}
        return VerificationReport(
            statement="baseline graph coloring",
            params={"n": n},
            checked=checked,
            violations=viol.finish(details),
            wall_time=time.perf_counter() - t0,
            details=details,
        )
    for f in ke.vertices:
        color = assigned.get(f)
        if color not in (1, 2, 3):
            viol.add(f"assignment {f} got color {color!r} outside 1..3")
    edge_checks = 0
    for i in range(ke.vertex_count):
        fi = ke.vertices[i]
        for j in ke.adjacency[i]:
            if j <= i:
                continue
            fj = ke.vertices[j]
            edge_checks += 1
            if assigned.get(fi) == assigned.get(fj):
                viol.add(
                    f"baseline colors an edge alike: {fi} -- {fj} "
                    f"both {assigned.get(fi)}"
                )
    checked += edge_checks
    agreement = 0
    for f in ke.vertices:
        if f[ctx.a] != f[ctx.b]:
            continue
        verdict = coloring.color_vertex(f, ctx)
        agreement += 1
        if verdict.branch is not coloring.Branch.EQUAL_ENDPOINTS:
            viol.add(
                f"equal-endpoint assignment {f} decided by "
                f"{verdict.branch.value}"
            )
        if verdict.color != assigned.get(f):
            viol.add(
                f"baseline and per-vertex colors differ on {f}: "
                f"{assigned.get(f)} vs {verdict.color}"
            )
    details = {
        "even_class_size": ke.vertex_count,
        "edges": edge_checks,
        "equal_endpoint_count": agreement,
    }
    return VerificationReport(
        statement="baseline graph coloring",
        params={"n": n},
        checked=checked,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )


def _component_members(host: Graph, start: tuple) -> list[tuple]:
    """All assignments reachable from ``start`` by adjacency, sorted."""
    members = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for g in neighbors(host, cur, 3):
                if g not in members:
                    members.add(g)
                    nxt.append(g)
        frontier = nxt
    return sorted(members)


def _component_expo(host: Graph, members: list[tuple]) -> ExpoGraph:
    index = {m: i for i, m in enumerate(members)}
    adjacency: list[tuple[int, ...]] = []
    loops = set()
    for m in members:
        row = set()
        for g in neighbors(host, m, 3):
            if g == m:
                loops.add(index[m])
            else:
                row.add(index[g])
        adjacency.append(tuple(sorted(row)))
    return ExpoGraph(
        host=host,
        k=3,
        cycle_target=False,
        vertices=tuple(members),
        adjacency=tuple(adjacency),
        loops=frozenset(loops),
    )


def verify_end_to_end(
    host: Graph,
    cap: int = DEFAULT_CAP,
    samples: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Drive the full pipeline on a host that needs at least four colors.

    With ``samples=None`` the whole assignment space ``3 ** |V(host)|``
    is processed: isolated assignments are counted, every connected
    component of the rest is colored through the shared cycle cache, all
    members of a component must have even parity on the cycle that
    serves the component, and adjacent members must receive different
    colors.  Components are also classified, and for the three-chromatic
    ones the even-parity property is probed on *every* odd cycle of the
    host.  With ``samples`` set, that many seeded random non-isolated
    assignments are colored together with one random neighbor each.
    """
    t0 = time.perf_counter()
    chi = chromatic_number_exact(host)
    if chi < 4:
        raise ValueError(
            f"host must need at least 4 colors, chromatic number is {chi}"
        )
    viol = _Tally()
    cache = coloring.CycleCache()
    nv = host.vertex_count
    details: dict = {"host_vertices": nv, "host_chi": chi}
    if samples is None:
        total = 3**nv
        if total > cap:
            raise CapacityError(
                f"3**{nv} = {total} assignments exceed the cap of {cap}; "
                "pass samples= to switch to seeded sampling",
                required=total,
                cap=cap,
            )
        colors: dict[tuple, int] = {}
        seen: set[tuple] = set()
        isolated = 0
        pair_checks = 0
        class_hist = {member.value: 0 for member in ComponentClass}
        all_odd = None
        ezs_even = True
        for f in itertools.product((1, 2, 3), repeat=nv):
            if f in seen:
                continue
            if is_isolated(host, f, 3):
                seen.add(f)
                isolated += 1
                continue
            members = _component_members(host, f)
            seen.update(members)
            for m in members:
                try:
                    verdict, cache = coloring.color_in_kh(host, m, cache)
                except (NoEvenCycleError, InvariantViolationError) as exc:
                    viol.add(f"pipeline failed on {m}: {exc}")
                    continue
                colors[m] = verdict.color
            serving = cache.find_even(host, members[0])
            if serving is None:
                viol.add(f"no cached cycle serves component of {members[0]}")
            else:
                cyc, _ = serving
                half = len(cyc.vertices) // 2
                for m in members:
                    if not in_even_class(restrict(host, m, cyc), half):
                        viol.add(
                            f"{m} has odd parity on its component's cycle "
                            f"{cyc.vertices}"
                        )
            for m in members:
                cm = colors.get(m)
                for g in neighbors(host, m, 3):
                    pair_checks += 1
                    cg = colors.get(g)
                    if cm is not None and cg is not None and cm == cg:
                        viol.add(f"adjacent pair colored alike: {m}, {g}")
            comp = _component_expo(host, members)
            cls = classify_component(comp)
            class_hist[cls.value] += 1
            if cls is ComponentClass.THREE_CHROMATIC:
                if all_odd is None:
                    all_odd = odd_cycles(host, nv)
                for m in members:
                    for cyc in all_odd:
                        half = len(cyc.vertices) // 2
                        if not in_even_class(restrict(host, m, cyc), half):
                            ezs_even = False
        details["isolated"] = isolated
        details["pairs"] = pair_checks
        details["component_classes"] = class_hist
        details["cache_cycles"] = len(cache)
        details["every_odd_cycle_even"] = ezs_even
        non_isolated = sorted(colors)
        details["nonisolated_count"] = len(non_isolated)
        if 0 < len(non_isolated) <= CHROMATIC_HARD_CAP:
            index = {m: i for i, m in enumerate(non_isolated)}
            edges = set()
            for m in non_isolated:
                for g in neighbors(host, m, 3):
                    if g != m:
                        a, b = index[m], index[g]
                        edges.add((min(a, b), max(a, b)))
            details["nonisolated_chi"] = chromatic_number_exact(
                Graph.from_edges(len(non_isolated), edges)
            )
        checked = total
        params = {"vertices": nv, "mode": "exhaustive"}
    else:
        rng = random.Random(seed)
        draws = 0
        pair_checks = 0
        for _ in range(samples):
            while True:
                draws += 1
                f = tuple(rng.randint(1, 3) for _ in range(nv))
                if not is_isolated(host, f, 3):
                    break
            try:
                vf, cache = coloring.color_in_kh(host, f, cache)
            except (NoEvenCycleError, InvariantViolationError) as exc:
                viol.add(f"pipeline failed on {f}: {exc}")
                continue
            g = tuple(rng.choice(opts) for opts in allowed_colors(host, f, 3))
            try:
                vg, cache = coloring.color_in_kh(host, g, cache)
            except (NoEvenCycleError, InvariantViolationError) as exc:
                viol.add(f"pipeline failed on sampled neighbor {g}: {exc}")
                continue
            pair_checks += 1
            if vf.color == vg.color:
                viol.add(f"sampled adjacent pair colored alike: {f}, {g}")
        details["draws"] = draws
        details["pairs"] = pair_checks
        details["cache_cycles"] = len(cache)
        checked = samples
        params = {"vertices": nv, "mode": "sampled", "samples": samples, "seed": seed}
    return VerificationReport(
        statement="end-to-end pipeline",
        params=params,
        checked=checked,
        violations=viol.finish(details),
        wall_time=time.perf_counter() - t0,
        details=details,
    )
