"""Exponential-graph construction checked against the raw definition."""

import itertools

import pytest

from expocolor.errors import CapacityError
from expocolor.expo import (
    ComponentClass,
    are_adjacent,
    allowed_colors,
    build_exponential,
    classify_component,
    component_of,
    expo_to_json_dict,
    is_isolated,
    neighbors,
    restrict,
)
from expocolor.graphs import CycleWitness, make_complete, make_cycle


def brute_adjacent(h, f, g, k, cycle_target=False):
    """Adjacency straight from the definition, no shortcuts."""
    def ok(x, y):
        if cycle_target:
            return (x - y) % k in (1, k - 1)
        return x != y

    for u, v in h.edges():
        if not ok(f[u], g[v]) or not ok(g[u], f[v]):
            return False
    return True


def all_assignments(h, k):
    return itertools.product(range(1, k + 1), repeat=h.vertex_count)


def test_are_adjacent_matches_definition_c3():
    h = make_cycle(3)
    for f in all_assignments(h, 3):
        for g in all_assignments(h, 3):
            assert are_adjacent(h, f, g, 3) == brute_adjacent(h, f, g, 3)


def test_are_adjacent_cycle_target_example():
    h = make_cycle(3)
    assert are_adjacent(h, (1, 3, 1), (2, 5, 2), 5, cycle_target=True)
    assert not are_adjacent(h, (1, 3, 1), (1, 3, 1), 5, cycle_target=True)


def test_neighbors_equals_brute_filter():
    cases = [
        (make_cycle(3), 3, False),
        (make_cycle(3), 5, True),
        (make_complete(4), 3, False),
    ]
    for h, k, cyc in cases:
        for f in all_assignments(h, k):
            got = list(neighbors(h, f, k, cyc))
            want = [
                g for g in all_assignments(h, k) if brute_adjacent(h, f, g, k, cyc)
            ]
            assert got == want, (h.vertex_count, k, cyc, f)
            assert is_isolated(h, f, k, cyc) == (not want)


def test_neighbors_is_product_of_allowed_sets():
    h = make_complete(4)
    f = (1, 1, 2, 2)
    allowed = allowed_colors(h, f, 3)
    assert allowed == [(3,), (3,), (3,), (3,)]
    assert list(neighbors(h, f, 3)) == [(3, 3, 3, 3)]


def test_build_exponential_sizes():
    assert build_exponential(make_cycle(3), 3).vertex_count == 27
    eg5 = build_exponential(make_cycle(5), 3)
    assert eg5.vertex_count == 243
    # self-loops are exactly the proper 3-colorings of the host
    assert len(eg5.loops) == 30
    assert build_exponential(make_complete(4), 3).vertex_count == 81


def test_build_exponential_loops_not_in_adjacency():
    eg = build_exponential(make_cycle(5), 3)
    for i in eg.loops:
        assert i not in eg.adjacency[i]


def test_build_exponential_capacity():
    with pytest.raises(CapacityError) as err:
        build_exponential(make_cycle(5), 3, cap=100)
    assert err.value.required == 243
    assert err.value.cap == 100


def test_component_of_k4_constant(k4):
    comp = component_of(k4, (1, 1, 1, 1), 3)
    # the two-or-fewer-color assignments form one component of 45
    assert len(comp) == 45
    assert (2, 3, 2, 3) in comp
    assert (1, 2, 3, 1) not in comp
    with pytest.raises(CapacityError):
        component_of(k4, (1, 1, 1, 1), 3, cap=10)


def test_classify_component_kinds(k4, c5):
    eg = build_exponential(k4, 3)
    members = sorted(component_of(k4, (1, 1, 1, 1), 3))
    comp, _ = eg.induce([eg.index_of(m) for m in members])
    assert classify_component(comp) == ComponentClass.THREE_CHROMATIC

    # an isolated assignment is its own trivial component
    iso = eg.induce([eg.index_of((1, 2, 3, 1))])[0]
    assert classify_component(iso) == ComponentClass.ISOLATED

    # a proper coloring of the host carries a self-loop
    eg5 = build_exponential(c5, 3)
    members = sorted(component_of(c5, (1, 2, 1, 2, 3), 3))
    comp5, _ = eg5.induce([eg5.index_of(m) for m in members])
    assert comp5.loops
    assert classify_component(comp5) == ComponentClass.REFLEXIVE_VERTEX


def test_classify_component_rejects_disconnected(k4):
    eg = build_exponential(k4, 3)
    idx = [eg.index_of((1, 1, 1, 1)), eg.index_of((1, 2, 3, 1))]
    frag, _ = eg.induce(idx)
    with pytest.raises(ValueError):
        classify_component(frag)


def test_restrict_projects_and_validates(k4):
    tri = CycleWitness((0, 1, 2))
    assert restrict(k4, (1, 2, 3, 1), tri) == (1, 2, 3)
    with pytest.raises(ValueError):
        restrict(k4, (1, 2, 3), tri)
    with pytest.raises(ValueError):
        restrict(make_cycle(5), (1, 2, 3, 1, 2), tri)  # 0-2 not a C_5 edge


def test_restrict_preserves_adjacency(k4):
    # restriction to a host cycle is a homomorphism of exponential graphs
    tri = CycleWitness((0, 1, 2))
    c3 = make_cycle(3)
    for f in itertools.product((1, 2, 3), repeat=4):
        for g in neighbors(k4, f, 3):
            assert brute_adjacent(c3, restrict(k4, f, tri), restrict(k4, g, tri), 3)


def test_expo_graph_helpers(c5):
    eg = build_exponential(c5, 3)
    assert eg.index_of((1, 1, 1, 1, 1)) == 0
    g = eg.to_graph()
    assert g.vertex_count == eg.vertex_count
    d = expo_to_json_dict(eg)
    assert d["n"] == 243
    assert d["k"] == 3
    assert d["cycle_target"] is False
    assert len(d["assignments"]) == 243
    assert sorted(d["loops"]) == sorted(eg.loops)
