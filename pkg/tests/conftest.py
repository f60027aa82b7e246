from __future__ import annotations

import math
import random

import pytest

from scenic_routes.arrangement import Arrangement, Edge, EdgeKind, Node, NodeKind
from scenic_routes.geometry import WeightedPoint

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    number, text = crit
    _criteria.setdefault(number, (text, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, outcomes = _criteria[number]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {text}")


def red(i, x, y, w):
    return WeightedPoint(i, "red", x, y, w)


def blue(i, x, y, w):
    return WeightedPoint(i, "blue", x, y, w)


def random_points(rng: random.Random, n_red: int, n_blue: int, span=30.0, wlo=1.0, whi=50.0):
    pts = []
    for i in range(n_red + n_blue):
        pts.append(
            WeightedPoint(
                i,
                "red" if i < n_red else "blue",
                rng.uniform(-span, span),
                rng.uniform(-span, span),
                rng.uniform(wlo, whi),
            )
        )
    return pts


def graph_arrangement(positions, edge_list, curves_of=None) -> Arrangement:
    """Hand-built arrangement of straight edges.

    ``edge_list`` holds ``(u, v)`` or ``(u, v, length)``; edge ``i`` lies on
    curve ``curves_of[i]`` (default: its own curve ``i``).
    """
    nodes = tuple(Node(i, float(x), float(y), frozenset(), NodeKind.INTERSECTION) for i, (x, y) in enumerate(positions))
    edges = []
    curve_edges: dict[int, list[int]] = {}
    for i, spec in enumerate(edge_list):
        u, v = spec[0], spec[1]
        length = spec[2] if len(spec) > 2 else math.dist(positions[u], positions[v])
        curve = curves_of[i] if curves_of is not None else i
        kind = EdgeKind.BRIDGE if curve is None else EdgeKind.SEGMENT
        edges.append(Edge(i, u, v, kind, curve, float(length)))
        if curve is not None:
            curve_edges.setdefault(curve, []).append(i)
    from scenic_routes.arrangement import _components
    from scenic_routes.geometry import Line, ScenicCurve

    curves = tuple(ScenicCurve(c, (0, 0), 1.0, Line(0.0, 0.0, 1.0, 0.0)) for c in sorted(curve_edges))
    return Arrangement(
        points=(),
        curves=curves,
        nodes=nodes,
        edges=tuple(edges),
        curve_edges={k: tuple(v) for k, v in curve_edges.items()},
        components=_components(len(nodes), edges),
        window=(-1.0, -1.0, 1.0, 1.0),
        eps=1e-9,
    )


# one red point (2.5) and three blue points (1.5, 1.8, 2.0) whose three
# circles cross pairwise in six distinct points
THREE_CIRCLES = [
    red(0, 0.0, 0.0, 2.5),
    blue(1, 3.0, 0.0, 1.5),
    blue(2, 2.819, 1.026, 1.8),
    blue(3, 1.532, 1.286, 2.0),
]


@pytest.fixture
def three_circle_points():
    return list(THREE_CIRCLES)


def lens_points():
    """1 red, 2 blue: two circles crossing at two points."""
    return [red(0, 0.0, 0.0, 2.0), blue(1, 3.0, 0.0, 1.0), blue(2, 2.4, 1.8, 1.0)]
