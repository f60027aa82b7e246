"""The scenic-path arrangement graph and component bridging.

Every red-blue pair contributes one scenic curve.  Intersection points of
the curves become graph nodes and each curve is cut at its nodes into
edges weighted by their length along the curve.  Bisector lines are
clipped to a finite window so that they have finite length.

Disconnected groups of curves are joined with straight bridge segments
(:func:`bridge_components`), shortest first.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence

from .geometry import (
    GEOM_RTOL,
    TWO_PI,
    Circle,
    Color,
    Line,
    Point,
    ScenicCurve,
    WeightedPoint,
    angle_of,
    bbox_diagonal,
    ccw_sweep,
    circle_circle_closest,
    circle_segment_closest,
    dist,
    intersect,
    scenic_curve,
    segment_segment_closest,
)

Window = tuple[float, float, float, float]

#: inflation applied to the landmark/circle bounding box to clip lines
WINDOW_INFLATION = 2.0


class NodeKind(str, enum.Enum):
    INTERSECTION = "intersection"
    CLIP = "clip"
    ANCHOR = "anchor"
    BRIDGE = "bridge"


class EdgeKind(str, enum.Enum):
    ARC = "arc"
    SEGMENT = "segment"
    BRIDGE = "bridge"
    LOOP = "loop"


@dataclass(frozen=True)
class Node:
    id: int
    x: float
    y: float
    curves: frozenset[int]
    kind: NodeKind = NodeKind.INTERSECTION

    @property
    def xy(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class Edge:
    """Graph edge between nodes ``u`` and ``v``.

    Arcs and loops carry their circle (``cx, cy, r``), the polar angle of
    ``u`` as ``start`` and the counterclockwise ``sweep`` that ends at ``v``.
    """

    id: int
    u: int
    v: int
    kind: EdgeKind
    curve: int | None
    length: float
    cx: float | None = None
    cy: float | None = None
    r: float | None = None
    start: float | None = None
    sweep: float | None = None

    @property
    def is_scenic(self) -> bool:
        return self.kind is not EdgeKind.BRIDGE

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u

    def point_at(self, frac: float, nodes: Sequence[Node]) -> Point:
        """Point at fraction ``frac`` of the way from ``u`` to ``v``."""
        if self.sweep is not None:
            theta = self.start + frac * self.sweep
            return (self.cx + self.r * math.cos(theta), self.cy + self.r * math.sin(theta))
        a, b = nodes[self.u], nodes[self.v]
        return (a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y))


@dataclass(frozen=True)
class BridgeCandidate:
    components: tuple[int, int]
    curves: tuple[int, int]
    segment: tuple[Point, Point]
    length: float


@dataclass(frozen=True)
class Arrangement:
    points: tuple[WeightedPoint, ...]
    curves: tuple[ScenicCurve, ...]
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    curve_edges: dict[int, tuple[int, ...]]
    components: tuple[tuple[int, ...], ...]
    window: Window
    eps: float
    bridges: tuple[BridgeCandidate, ...] = field(default=())

    @cached_property
    def incident(self) -> dict[int, tuple[int, ...]]:
        """Node id -> incident edge ids; a self-loop is listed twice."""
        inc: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for e in self.edges:
            inc[e.u].append(e.id)
            inc[e.v].append(e.id)
        return {k: tuple(v) for k, v in inc.items()}

    @cached_property
    def edge_curve(self) -> dict[int, int | None]:
        return {e.id: e.curve for e in self.edges}

    def degree(self, node: int) -> int:
        return len(self.incident[node])

    @property
    def total_length(self) -> float:
        return math.fsum(e.length for e in self.edges)

    @property
    def bridge_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.kind is EdgeKind.BRIDGE]

    @property
    def intersection_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.kind is NodeKind.INTERSECTION]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1


class _NodeRegistry:
    """Collects node positions, merging points closer than ``eps``."""

    def __init__(self, eps: float):
        self.eps = eps
        self.xy: list[Point] = []
        self.curves: list[set[int]] = []
        self.kinds: list[NodeKind] = []
        self._grid: dict[tuple[int, int], list[int]] = defaultdict(list)

    def _cell(self, p: Point) -> tuple[int, int]:
        return (math.floor(p[0] / self.eps), math.floor(p[1] / self.eps))

    def add(self, p: Point, curves: Iterable[int], kind: NodeKind) -> int:
        cx, cy = self._cell(p)
        for key in itertools.product((cx - 1, cx, cx + 1), (cy - 1, cy, cy + 1)):
            for nid in self._grid.get(key, ()):
                if dist(self.xy[nid], p) <= self.eps:
                    self.curves[nid].update(curves)
                    return nid
        nid = len(self.xy)
        self.xy.append(p)
        self.curves.append(set(curves))
        self.kinds.append(kind)
        self._grid[(cx, cy)].append(nid)
        return nid


def _inside(p: Point, window: Window, slack: float) -> bool:
    return (
        window[0] - slack <= p[0] <= window[2] + slack
        and window[1] - slack <= p[1] <= window[3] + slack
    )


def clip_window(points: Sequence[WeightedPoint], curves: Sequence[ScenicCurve]) -> Window:
    """Bounding box of landmarks and circle extents, inflated about its center."""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    for c in curves:
        if isinstance(c.shape, Circle):
            s = c.shape
            xs += [s.cx - s.r, s.cx + s.r]
            ys += [s.cy - s.r, s.cy + s.r]
    mx, my = 0.5 * (min(xs) + max(xs)), 0.5 * (min(ys) + max(ys))
    hx, hy = 0.5 * (max(xs) - min(xs)), 0.5 * (max(ys) - min(ys))
    # collinear landmarks with only bisector lines give a flat box
    floor = 0.5 * max(hx, hy)
    hx, hy = WINDOW_INFLATION * max(hx, floor), WINDOW_INFLATION * max(hy, floor)
    return (mx - hx, my - hy, mx + hx, my + hy)


def clip_line(line: Line, window: Window) -> tuple[float, float]:
    """Parameter interval of the line inside the window (slab method)."""
    lo, hi = -math.inf, math.inf
    for p, d, wmin, wmax in ((line.px, line.dx, window[0], window[2]), (line.py, line.dy, window[1], window[3])):
        if d == 0.0:
            continue
        t0, t1 = (wmin - p) / d, (wmax - p) / d
        lo, hi = max(lo, min(t0, t1)), min(hi, max(t0, t1))
    return lo, hi


def curve_extent(curve: ScenicCurve, window: Window) -> tuple[Point, Point] | None:
    """Clipped end points of a line curve; ``None`` for circles."""
    if isinstance(curve.shape, Line):
        t0, t1 = clip_line(curve.shape, window)
        return curve.shape.at(t0), curve.shape.at(t1)
    return None


def make_curves(points: Sequence[WeightedPoint]) -> list[ScenicCurve]:
    reds = sorted((p for p in points if p.color is Color.RED), key=lambda p: p.id)
    blues = sorted((p for p in points if p.color is Color.BLUE), key=lambda p: p.id)
    return [scenic_curve(r, b, i) for i, (r, b) in enumerate(itertools.product(reds, blues))]


def _partition(
    curves: Sequence[ScenicCurve],
    registry: _NodeRegistry,
    window: Window,
) -> tuple[list[Node], list[Edge], dict[int, tuple[int, ...]]]:
    """Cut every curve at the registered nodes lying on it.

    Circles without nodes receive an anchor node at polar angle 0 and a
    single loop edge.
    """
    on_curve: dict[int, list[int]] = defaultdict(list)
    for nid, cs in enumerate(registry.curves):
        for c in cs:
            on_curve[c].append(nid)

    edges: list[Edge] = []
    curve_edges: dict[int, tuple[int, ...]] = {}
    for curve in curves:
        ids = on_curve.get(curve.id, [])
        start_edge = len(edges)
        shape = curve.shape
        if isinstance(shape, Circle):
            if not ids:
                anchor = registry.add((shape.cx + shape.r, shape.cy), [curve.id], NodeKind.ANCHOR)
                edges.append(
                    Edge(len(edges), anchor, anchor, EdgeKind.LOOP, curve.id, TWO_PI * shape.r,
                         shape.cx, shape.cy, shape.r, 0.0, TWO_PI)
                )
            else:
                ordered = sorted((angle_of(shape, registry.xy[n]), n) for n in ids)
                k = len(ordered)
                for i, (theta, u) in enumerate(ordered):
                    theta_v, v = ordered[(i + 1) % k]
                    sweep = ccw_sweep(theta, theta_v) if k > 1 else TWO_PI
                    edges.append(
                        Edge(len(edges), u, v, EdgeKind.ARC, curve.id, shape.r * sweep,
                             shape.cx, shape.cy, shape.r, theta, sweep)
                    )
        else:
            ordered = sorted((shape.param(registry.xy[n]), n) for n in ids)
            for (_, u), (_, v) in zip(ordered, ordered[1:]):
                length = dist(registry.xy[u], registry.xy[v])
                edges.append(Edge(len(edges), u, v, EdgeKind.SEGMENT, curve.id, length))
        curve_edges[curve.id] = tuple(range(start_edge, len(edges)))

    nodes = [
        Node(i, xy[0], xy[1], frozenset(cs), kind)
        for i, (xy, cs, kind) in enumerate(zip(registry.xy, registry.curves, registry.kinds))
    ]
    return nodes, edges, curve_edges


def _components(n_nodes: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n_nodes))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = defaultdict(list)
    for n in range(n_nodes):
        groups[find(n)].append(n)
    return tuple(sorted(tuple(g) for g in groups.values()))


def build_arrangement(points: Sequence[WeightedPoint]) -> Arrangement:
    """Build the scenic-path graph of a two-class point set.

    Raises
    ------
    ValueError
        If either class is empty or ids repeat.
    DegeneratePairError
        If a red and a blue landmark share a position.
    """
    points = tuple(points)
    if len({p.id for p in points}) != len(points):
        raise ValueError("point ids must be unique")
    if not any(p.color is Color.RED for p in points) or not any(p.color is Color.BLUE for p in points):
        raise ValueError("both classes required")

    curves = make_curves(points)
    eps = GEOM_RTOL * bbox_diagonal(p.xy for p in points)
    window = clip_window(points, curves)
    registry = _NodeRegistry(eps)

    for ci, cj in itertools.combinations(curves, 2):
        has_line = ci.is_line or cj.is_line
        for p in intersect(ci, cj, eps):
            if has_line and not _inside(p, window, eps):
                continue
            registry.add(p, (ci.id, cj.id), NodeKind.INTERSECTION)
    for c in curves:
        ends = curve_extent(c, window)
        if ends is not None:
            for p in ends:
                registry.add(p, (c.id,), NodeKind.CLIP)

    nodes, edges, curve_edges = _partition(curves, registry, window)
    return Arrangement(
        points=points,
        curves=tuple(curves),
        nodes=tuple(nodes),
        edges=tuple(edges),
        curve_edges=curve_edges,
        components=_components(len(nodes), edges),
        window=window,
        eps=eps,
    )


def connected_components(arr: Arrangement) -> tuple[tuple[int, ...], ...]:
    """Node-id partition of the arrangement into connected components."""
    return _components(len(arr.nodes), arr.edges)


def curve_closest(
    a: ScenicCurve, b: ScenicCurve, window: Window
) -> tuple[float, Point, Point]:
    """Closest pair of points ``(pa on a, pb on b)`` of two non-crossing curves."""
    ea, eb = curve_extent(a, window), curve_extent(b, window)
    if ea is None and eb is None:
        return circle_circle_closest(a.shape, b.shape)
    if ea is None:
        d, pa, pb = circle_segment_closest(a.shape, *eb)
        return d, pa, pb
    if eb is None:
        d, pb, pa = circle_segment_closest(b.shape, *ea)
        return d, pa, pb
    return segment_segment_closest(*ea, *eb)


def bridge_candidates(arr: Arrangement) -> dict[tuple[int, int], BridgeCandidate]:
    """Shortest straight connector for every pair of components.

    The closest pair of points between two components is the closest pair
    over their curves; the edges of a curve cover it completely.
    """
    comps = connected_components(arr)
    node_comp = {n: i for i, comp in enumerate(comps) for n in comp}
    comp_curves: dict[int, list[ScenicCurve]] = defaultdict(list)
    for c in arr.curves:
        first = arr.edges[arr.curve_edges[c.id][0]]
        comp_curves[node_comp[first.u]].append(c)

    table: dict[tuple[int, int], BridgeCandidate] = {}
    for i, j in itertools.combinations(range(len(comps)), 2):
        best = None
        for ca in comp_curves[i]:
            for cb in comp_curves[j]:
                d, pa, pb = curve_closest(ca, cb, arr.window)
                if best is None or d < best.length:
                    best = BridgeCandidate((i, j), (ca.id, cb.id), (pa, pb), d)
        table[(i, j)] = best
    return table


def bridge_components(arr: Arrangement) -> Arrangement:
    """Connect all components with straight bridge edges (greedy, shortest first).

    Each round picks the shortest connector between any two current
    groups of components and merges the two groups, until a single group
    remains.  Connector end points are inserted as nodes on the curves
    they touch, so the touched edges are split.
    """
    if len(arr.components) <= 1:
        return arr
    table = bridge_candidates(arr)
    groups: list[set[int]] = [{i} for i in range(len(arr.components))]
    chosen: list[BridgeCandidate] = []
    while len(groups) > 1:
        best = None
        for gi, gj in itertools.combinations(range(len(groups)), 2):
            for a in groups[gi]:
                for b in groups[gj]:
                    cand = table[(min(a, b), max(a, b))]
                    if best is None or (cand.length, cand.components) < (best[0].length, best[0].components):
                        best = (cand, gi, gj)
        cand, gi, gj = best
        chosen.append(cand)
        groups[gi] |= groups[gj]
        del groups[gj]

    registry = _NodeRegistry(arr.eps)
    for n in arr.nodes:
        if n.kind is not NodeKind.ANCHOR:
            registry.add(n.xy, n.curves, n.kind)
    ends = []
    for cand in chosen:
        pa, pb = cand.segment
        ends.append(
            (registry.add(pa, (cand.curves[0],), NodeKind.BRIDGE),
             registry.add(pb, (cand.curves[1],), NodeKind.BRIDGE))
        )

    nodes, edges, curve_edges = _partition(arr.curves, registry, arr.window)
    for (u, v), cand in zip(ends, chosen):
        edges.append(Edge(len(edges), u, v, EdgeKind.BRIDGE, None, cand.length))
    return replace(
        arr,
        nodes=tuple(nodes),
        edges=tuple(edges),
        curve_edges=curve_edges,
        components=_components(len(nodes), edges),
        bridges=tuple(chosen),
    )


def build_bridged(points: Sequence[WeightedPoint]) -> Arrangement:
    return bridge_components(build_arrangement(points))
