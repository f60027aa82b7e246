"""Scenic route construction: ACU, ACCH and DPE.

All three algorithms take a bridged arrangement and its shortest-path
table and return a connected subgraph (:class:`Route`) that contains at
least one edge of every scenic curve.

ACU (all curve umbrella)
    Take the shortest edge of every curve, order those edges by the angle
    of their chord midpoints around the centroid of their endpoints, and
    chain consecutive edges with shortest paths.  Both rotational senses
    are built and the shorter route is kept.
ACCH (all curve convex hull)
    Same seed edges; walk the convex hull of their endpoints with shortest
    paths, skipping path edges whose endpoints are already connected.
DPE (dense point expansion)
    Visit nodes by decreasing degree and collect, at each node, edges on
    curves not yet covered, until every curve is covered; then walk the
    hull of the collected nodes.

ACCH and DPE finish by joining leftover pieces of the route to their
nearest piece with shortest paths.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .arrangement import Arrangement, EdgeKind
from .geometry import Point
from .shortest_paths import ApspTable, reconstruct_path


class Algorithm(str, enum.Enum):
    ACU = "acu"
    ACCH = "acch"
    DPE = "dpe"


@dataclass(frozen=True)
class Route:
    """A route subgraph ``G(S, E)``.

    ``edges`` holds each edge once, in the order it was added.
    ``seed_edges`` are the edges chosen before any connecting step (the
    per-curve shortest edges for ACU/ACCH, the accretion edges for DPE).
    """

    algorithm: Algorithm
    edges: tuple[int, ...]
    nodes: frozenset[int]
    seed_edges: tuple[int, ...]
    construction_log: tuple[tuple[str, tuple[int, ...]], ...]

    def length(self, arr: Arrangement) -> float:
        return math.fsum(arr.edges[e].length for e in self.edges)

    @property
    def connector_edges(self) -> tuple[int, ...]:
        seeds = set(self.seed_edges)
        return tuple(e for e in self.edges if e not in seeds)


@dataclass(frozen=True)
class SeedEdgeSet:
    edges: tuple[int, ...]
    endpoints: frozenset[int]


class _RouteBuilder:
    def __init__(self, arr: Arrangement, apsp: ApspTable):
        self.arr = arr
        self.apsp = apsp
        self.edges: list[int] = []
        self._edge_set: set[int] = set()
        self.log: list[tuple[str, tuple[int, ...]]] = []
        self._parent: dict[int, int] = {}

    def find(self, a: int) -> int:
        parent = self._parent
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def _union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)

    def add(self, eid: int) -> bool:
        if eid in self._edge_set:
            return False
        e = self.arr.edges[eid]
        self.edges.append(eid)
        self._edge_set.add(eid)
        self._union(e.u, e.v)
        return True

    def add_path(self, path: Sequence[int], step: str, skip_connected: bool = False) -> list[int]:
        added = []
        for eid in path:
            e = self.arr.edges[eid]
            if skip_connected and self.find(e.u) == self.find(e.v):
                continue
            if self.add(eid):
                added.append(eid)
        self.log.append((step, tuple(added)))
        return added

    def connect(self, a: int, b: int, step: str, skip_connected: bool = False) -> list[int]:
        return self.add_path(reconstruct_path(self.apsp, a, b), step, skip_connected)

    @property
    def nodes(self) -> frozenset[int]:
        out = set()
        for eid in self.edges:
            e = self.arr.edges[eid]
            out.update((e.u, e.v))
        return frozenset(out)

    def pieces(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for n in sorted(self.nodes):
            groups.setdefault(self.find(n), []).append(n)
        return sorted(groups.values())

    def join_pieces(self, step: str) -> None:
        """Join disconnected pieces, nearest pair (by path distance) first."""
        dist = self.apsp.dist
        while True:
            pieces = self.pieces()
            if len(pieces) <= 1:
                return
            best = None
            for i in range(len(pieces)):
                for j in range(i + 1, len(pieces)):
                    sub = dist[np.ix_(pieces[i], pieces[j])]
                    k = int(np.argmin(sub))
                    d = sub.flat[k]
                    if best is None or d < best[0]:
                        a, b = divmod(k, len(pieces[j]))
                        best = (d, pieces[i][a], pieces[j][b])
            self.connect(best[1], best[2], step)

    def finish(self, algorithm: Algorithm, seeds: Sequence[int]) -> Route:
        return Route(algorithm, tuple(self.edges), self.nodes, tuple(seeds), tuple(self.log))


def seed_edges(arr: Arrangement) -> SeedEdgeSet:
    """Shortest edge of every curve (ties go to the lower edge id)."""
    chosen = []
    endpoints: set[int] = set()
    for curve in arr.curves:
        eid = min(arr.curve_edges[curve.id], key=lambda i: (arr.edges[i].length, i))
        chosen.append(eid)
        endpoints.update((arr.edges[eid].u, arr.edges[eid].v))
    return SeedEdgeSet(tuple(chosen), frozenset(endpoints))


def centroid(arr: Arrangement, node_ids) -> Point:
    ids = sorted(node_ids)
    return (
        math.fsum(arr.nodes[n].x for n in ids) / len(ids),
        math.fsum(arr.nodes[n].y for n in ids) / len(ids),
    )


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the hull vertices in counterclockwise order (monotone chain).

    Collinear boundary points are dropped.  Duplicate points are reported
    once (first index).  One or two distinct points are returned as they are.
    """
    first: dict[Point, int] = {}
    for i, p in enumerate(points):
        first.setdefault((float(p[0]), float(p[1])), i)
    pts = sorted(first)
    if len(pts) <= 2:
        return sorted(first.values())

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return [first[p] for p in hull]


def _hull_tour(arr: Arrangement, node_ids) -> list[tuple[int, int]]:
    ids = sorted(node_ids)
    hull = [ids[i] for i in convex_hull([arr.nodes[n].xy for n in ids])]
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        # degenerate hull: out and back
        return [(hull[0], hull[1]), (hull[1], hull[0])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def _midpoint_angle(arr: Arrangement, eid: int, g: Point) -> float:
    e = arr.edges[eid]
    a, b = arr.nodes[e.u], arr.nodes[e.v]
    return math.atan2(0.5 * (a.y + b.y) - g[1], 0.5 * (a.x + b.x) - g[0])


def _acu_chain(arr: Arrangement, apsp: ApspTable, order: Sequence[int], sense: str) -> _RouteBuilder:
    b = _RouteBuilder(arr, apsp)
    b.add_path(order, "seed")
    b.log.append((f"orientation:{sense}", ()))
    ends = [(arr.edges[e].u, arr.edges[e].v) for e in order]
    if len(ends) == 1:
        return b
    dist = apsp.dist

    def other(end: tuple[int, int], node: int) -> int:
        return end[1] if node == end[0] else end[0]

    e1, e2 = ends[0], ends[1]
    combos = [(e1[0], e2[0]), (e1[0], e2[1]), (e1[1], e2[0]), (e1[1], e2[1])]
    start, entry = min(combos, key=lambda pr: dist[pr])
    b.connect(start, entry, "connect-first")
    first_free = other(e1, start)
    for i in range(1, len(ends) - 1):
        free = other(ends[i], entry)
        target = min(ends[i + 1], key=lambda n: dist[free, n])
        b.connect(free, target, "connect")
        entry = target
    b.connect(other(ends[-1], entry), first_free, "connect-last")
    return b


def acu_route(arr: Arrangement, apsp: ApspTable) -> Route:
    seeds = seed_edges(arr)
    g = centroid(arr, seeds.endpoints)
    angles = {e: _midpoint_angle(arr, e, g) for e in seeds.edges}
    ccw = sorted(seeds.edges, key=lambda e: (angles[e], e))
    cw = sorted(seeds.edges, key=lambda e: (-angles[e], e))
    builders = [_acu_chain(arr, apsp, ccw, "ccw"), _acu_chain(arr, apsp, cw, "cw")]
    lengths = [math.fsum(arr.edges[e].length for e in bld.edges) for bld in builders]
    best = builders[0] if lengths[0] <= lengths[1] else builders[1]
    return best.finish(Algorithm.ACU, seeds.edges)


def acch_route(arr: Arrangement, apsp: ApspTable, skip_rule: str = "edge") -> Route:
    """All curve convex hull route.

    With ``skip_rule="edge"`` every edge of a hull connector is dropped
    when its two endpoints are already connected in the route so far.
    ``"path"`` drops a whole connector when the two hull vertices it joins
    are already connected.
    """
    if skip_rule not in ("edge", "path"):
        raise ValueError(f"unknown skip rule {skip_rule!r}")
    seeds = seed_edges(arr)
    b = _RouteBuilder(arr, apsp)
    b.add_path(seeds.edges, "seed")
    for a, c in _hull_tour(arr, seeds.endpoints):
        if skip_rule == "path":
            if b.find(a) != b.find(c):
                b.connect(a, c, "hull")
        else:
            b.connect(a, c, "hull", skip_connected=True)
    b.join_pieces("join")
    return b.finish(Algorithm.ACCH, seeds.edges)


def dpe_order(arr: Arrangement) -> list[int]:
    """Nodes by decreasing degree, then increasing incident edge length, then id."""
    def key(n: int):
        inc = arr.incident[n]
        return (-len(inc), math.fsum(arr.edges[e].length for e in inc), n)

    return sorted((n.id for n in arr.nodes), key=key)


def dpe_route(arr: Arrangement, apsp: ApspTable) -> Route:
    b = _RouteBuilder(arr, apsp)
    remaining = {c.id for c in arr.curves}
    accreted: list[int] = []
    for node in dpe_order(arr):
        if not remaining:
            break
        added = []
        for eid in sorted(set(arr.incident[node]), key=lambda i: (arr.edges[i].length, i)):
            e = arr.edges[eid]
            if e.kind is EdgeKind.BRIDGE or e.curve not in remaining:
                continue
            b.add(eid)
            remaining.discard(e.curve)
            added.append(eid)
        b.log.append((f"accrete:{node}", tuple(added)))
        accreted += added
    for a, c in _hull_tour(arr, b.nodes):
        b.connect(a, c, "hull")
    b.join_pieces("join")
    return b.finish(Algorithm.DPE, accreted)


ALGORITHMS = {
    Algorithm.ACU: acu_route,
    Algorithm.ACCH: acch_route,
    Algorithm.DPE: dpe_route,
}


def run_algorithm(name: str | Algorithm, arr: Arrangement, apsp: ApspTable) -> Route:
    return ALGORITHMS[Algorithm(name)](arr, apsp)
