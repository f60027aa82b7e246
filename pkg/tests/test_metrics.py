import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scenic_routes.arrangement import build_arrangement, build_bridged
from scenic_routes.metrics import (
    format_report,
    metrics_from_edges,
    peel_repeated,
    requirement_report,
    route_metrics,
)
from scenic_routes.routes import Algorithm, Route, acu_route, run_algorithm
from scenic_routes.shortest_paths import compute_apsp

from conftest import blue, graph_arrangement, lens_points, random_points, red
from oracles import dangling_edges, min_covering_walk


def whole_graph_route(arr):
    ids = tuple(e.id for e in arr.edges)
    nodes = frozenset(n for e in arr.edges for n in (e.u, e.v))
    return Route(Algorithm.ACU, ids, nodes, (), ())


def test_four_cycle():
    arr = graph_arrangement([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (3, 0)])
    m = route_metrics(whole_graph_route(arr), arr)
    assert (m.num_edges, m.num_repeated, m.repeated_pct) == (4, 0, 0.0)
    assert m.route_length == pytest.approx(4.0)
    assert m.walk_length == m.route_length


def test_three_path():
    arr = graph_arrangement([(0, 0), (1, 0), (2, 0), (3, 0)], [(0, 1), (1, 2), (2, 3)])
    m = route_metrics(whole_graph_route(arr), arr)
    assert (m.num_edges, m.num_repeated, m.repeated_pct) == (3, 3, 100.0)
    assert m.walk_length == pytest.approx(6.0)


def test_cycle_with_pendant():
    # cycle of length 10 (four edges of 2.5) plus a pendant of length 2
    positions = [(0, 0), (1, 0), (1, 1), (0, 1), (2, 0)]
    edges = [(0, 1, 2.5), (1, 2, 2.5), (2, 3, 2.5), (3, 0, 2.5), (1, 4, 2.0)]
    arr = graph_arrangement(positions, edges)
    m = route_metrics(whole_graph_route(arr), arr)
    assert m.route_length == pytest.approx(12.0)
    assert m.num_edges == 5
    assert m.num_repeated == 1
    assert m.repeated_edges == (4,)
    assert m.repeated_pct == pytest.approx(20.0)
    assert m.walk_length == pytest.approx(14.0)


def test_loops_are_not_peeled():
    assert peel_repeated([(0, 3, 3)]) == []
    # loop with a tail: the tail goes, the loop stays
    assert peel_repeated([(0, 3, 3), (1, 3, 4), (2, 4, 5)]) == [2, 1]


def test_parallel_pair_is_a_cycle():
    assert peel_repeated([(0, 1, 2), (1, 1, 2)]) == []


def test_star_peels_completely():
    assert sorted(peel_repeated([(0, 0, 1), (1, 0, 2), (2, 0, 3)])) == [0, 1, 2]


def test_lens_acu_report():
    arr = build_arrangement(lens_points())
    route = acu_route(arr, compute_apsp(arr))
    m = route_metrics(route, arr)
    assert m.complete and m.scenic_only and m.num_repeated == 0
    checks = {c.number: c for c in requirement_report(route, arr)}
    assert checks[1].passed is True
    assert checks[2].passed is True
    assert checks[4].values["NoRE"] == 0
    text = format_report(list(checks.values()))
    assert "completeness" in text


def test_bridged_route_not_scenic_only():
    from test_arrangement import TWO_CLUSTERS

    arr = build_bridged(TWO_CLUSTERS)
    route = acu_route(arr, compute_apsp(arr))
    m = route_metrics(route, arr)
    assert m.complete
    assert not m.scenic_only
    assert m.bridge_length > 0


def test_single_loop_route():
    arr = build_arrangement([red(0, 0, 0, 2), blue(1, 3, 0, 1)])
    m = route_metrics(acu_route(arr, compute_apsp(arr)), arr)
    assert m.complete and m.num_edges == 1 and m.num_repeated == 0


def test_incomplete_detected():
    arr = build_arrangement(lens_points())
    route = Route(Algorithm.ACU, (0,), frozenset({0, 1}), (0,), ())
    m = route_metrics(route, arr)
    assert not m.complete
    assert (m.covered_curves, m.total_curves) == (1, 2)


def test_empty_route():
    arr = build_arrangement(lens_points())
    with pytest.raises(ValueError):
        route_metrics(Route(Algorithm.ACU, (), frozenset(), (), ()), arr)


def test_metrics_from_rows_matches():
    rng = random.Random(3)
    for _ in range(10):
        arr = build_bridged(random_points(rng, 4, 4))
        route = run_algorithm("dpe", arr, compute_apsp(arr))
        rows = [(e, arr.edges[e].u, arr.edges[e].v, arr.edges[e].kind.value, arr.edges[e].curve,
                 arr.edges[e].length) for e in route.edges]
        assert metrics_from_edges(rows, [c.id for c in arr.curves]) == route_metrics(route, arr)


def test_percentage_identity_random():
    rng = random.Random(17)
    for _ in range(30):
        arr = build_bridged(random_points(rng, 4, 4))
        apsp = compute_apsp(arr)
        for algo in Algorithm:
            m = route_metrics(run_algorithm(algo, arr, apsp), arr)
            assert 0 <= m.num_repeated <= m.num_edges
            assert m.repeated_pct == pytest.approx(100.0 * m.num_repeated / m.num_edges)
            assert m.route_length >= 0


multigraph = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=12)


@settings(max_examples=300, deadline=None)
@given(multigraph)
def test_peeling_matches_dangling_oracle(pairs):
    edges = [(i, u, v) for i, (u, v) in enumerate(pairs)]
    assert sorted(peel_repeated(edges)) == dangling_edges(edges)


def _connected(edges):
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            a = parent[a]
        return a

    for _, u, v, _ in edges:
        parent[find(u)] = find(v)
    return len({find(n) for _, u, v, _ in edges for n in (u, v)}) == 1


@settings(max_examples=200, deadline=None)
@given(multigraph, st.randoms(use_true_random=False))
def test_peeled_edges_are_walked_twice(pairs, rnd):
    """Every peeled edge is doubled in a minimal closed covering walk."""
    edges = [(i, u, v, rnd.uniform(0.5, 5.0)) for i, (u, v) in enumerate(pairs[:9])]
    if not _connected(edges):
        return
    _, doubled = min_covering_walk(edges)
    assert set(peel_repeated((e[0], e[1], e[2]) for e in edges)) <= set(doubled)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6), st.lists(st.integers(0, 20), max_size=4), st.randoms(use_true_random=False))
def test_cycle_with_trees_matches_walk(cycle_len, tree_parents, rnd):
    """On a cycle with hanging trees, peeling and the walk oracle agree."""
    edges = [(i, i, (i + 1) % cycle_len, rnd.uniform(0.5, 5.0)) for i in range(cycle_len)]
    n = cycle_len
    for p in tree_parents:
        edges.append((len(edges), p % n, n, rnd.uniform(0.5, 5.0)))
        n += 1
    _, doubled = min_covering_walk(edges)
    peeled = peel_repeated((e[0], e[1], e[2]) for e in edges)
    assert sorted(peeled) == doubled
    assert len(peeled) == len(tree_parents)


def test_even_core_routes_match_walk():
    """Where the peeled core has only even degrees the two counts coincide."""
    rng = random.Random(0)
    checked = 0
    for _ in range(300):
        arr = build_bridged(random_points(rng, rng.randint(1, 3), rng.randint(1, 3)))
        apsp = compute_apsp(arr)
        for algo in Algorithm:
            route = run_algorithm(algo, arr, apsp)
            if len(route.edges) > 10:
                continue
            rows = [(e, arr.edges[e].u, arr.edges[e].v, arr.edges[e].length) for e in route.edges]
            peeled = set(peel_repeated((r[0], r[1], r[2]) for r in rows))
            deg = Counter()
            for eid, u, v, _ in rows:
                if eid not in peeled:
                    deg[u] += 1
                    deg[v] += 1
            if any(d % 2 for d in deg.values()):
                continue
            checked += 1
            _, doubled = min_covering_walk(rows)
            assert len(doubled) == len(peeled)
    assert checked > 50


def test_walk_length_counts_repeats_twice():
    arr = graph_arrangement([(0, 0), (1, 0), (2, 0)], [(0, 1, 1.5), (1, 2, 2.5)])
    m = route_metrics(whole_graph_route(arr), arr)
    assert m.walk_length == pytest.approx(2 * (1.5 + 2.5))
    assert math.isclose(m.route_length, 4.0)
