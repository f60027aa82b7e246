"""Route evaluation against the five scenic-route requirements.

1. completeness: every red-blue pair's curve has at least one route edge
2. only scenic: no bridge edges
3. route length: sum of distinct route edge lengths
4. repeated edges: edges on dangling stretches, found by peeling degree-1 nodes
5. number of edges
"""

from __future__ import annotations

import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable

from .arrangement import Arrangement, EdgeKind


@dataclass(frozen=True)
class RouteMetrics:
    route_length: float
    num_edges: int
    num_repeated: int
    repeated_pct: float
    complete: bool
    scenic_only: bool
    walk_length: float
    covered_curves: int
    total_curves: int
    bridge_length: float
    repeated_edges: tuple[int, ...] = field(default=())

    def as_row(self) -> dict[str, float]:
        return {
            "RL": self.route_length,
            "NoE": self.num_edges,
            "NoRE": self.num_repeated,
            "RE%": self.repeated_pct,
            "WL": self.walk_length,
        }


@dataclass(frozen=True)
class RequirementCheck:
    number: int
    name: str
    passed: bool | None
    values: dict[str, float]


def peel_repeated(edges: Iterable[tuple[int, int, int]]) -> list[int]:
    """Edge ids removed by repeatedly deleting edges at degree-1 nodes.

    ``edges`` yields ``(edge id, u, v)``.  Self-loops add 2 to the degree of
    their node and are never peeled.  The result is in removal order.
    """
    edges = list(edges)
    degree: dict[int, int] = defaultdict(int)
    incident: dict[int, list[int]] = defaultdict(list)
    for idx, (_, u, v) in enumerate(edges):
        degree[u] += 1
        degree[v] += 1
        incident[u].append(idx)
        incident[v].append(idx)
    alive = [True] * len(edges)
    queue = deque(sorted(n for n, d in degree.items() if d == 1))
    removed = []
    while queue:
        n = queue.popleft()
        if degree[n] != 1:
            continue
        idx = next(i for i in incident[n] if alive[i])
        alive[idx] = False
        eid, u, v = edges[idx]
        removed.append(eid)
        degree[u] -= 1
        degree[v] -= 1
        other = v if n == u else u
        if degree[other] == 1:
            queue.append(other)
    return removed


def route_metrics(route, arr: Arrangement) -> RouteMetrics:
    """Compute RL, NoE, NoRE, RE% and the coverage flags of a route.

    Raises
    ------
    ValueError
        If the route has no edges.
    """
    if not route.edges:
        raise ValueError("empty route")
    edges = [arr.edges[e] for e in route.edges]
    return metrics_from_edges(
        [(e.id, e.u, e.v, e.kind, e.curve, e.length) for e in edges],
        [c.id for c in arr.curves],
    )


def metrics_from_edges(rows, curve_ids) -> RouteMetrics:
    """Metrics from plain ``(id, u, v, kind, curve, length)`` rows."""
    rows = list(rows)
    if not rows:
        raise ValueError("empty route")
    length = {r[0]: r[5] for r in rows}
    repeated = peel_repeated((r[0], r[1], r[2]) for r in rows)
    rl = math.fsum(length.values())
    covered = {r[4] for r in rows if EdgeKind(r[3]) is not EdgeKind.BRIDGE}
    bridge_len = math.fsum(r[5] for r in rows if EdgeKind(r[3]) is EdgeKind.BRIDGE)
    n = len(rows)
    curve_ids = set(curve_ids)
    return RouteMetrics(
        route_length=rl,
        num_edges=n,
        num_repeated=len(repeated),
        repeated_pct=100.0 * len(repeated) / n,
        complete=curve_ids <= covered,
        scenic_only=bridge_len == 0.0 and all(EdgeKind(r[3]) is not EdgeKind.BRIDGE for r in rows),
        walk_length=rl + math.fsum(length[e] for e in repeated),
        covered_curves=len(covered & curve_ids),
        total_curves=len(curve_ids),
        bridge_length=bridge_len,
        repeated_edges=tuple(repeated),
    )


def requirement_report(route, arr: Arrangement) -> list[RequirementCheck]:
    m = route_metrics(route, arr)
    return [
        RequirementCheck(1, "completeness", m.complete,
                         {"covered_pairs": m.covered_curves, "total_pairs": m.total_curves}),
        RequirementCheck(2, "only scenic", m.scenic_only, {"bridge_length": m.bridge_length}),
        RequirementCheck(3, "route length", None, {"RL": m.route_length, "WL": m.walk_length}),
        RequirementCheck(4, "repeated edges", None,
                         {"NoRE": m.num_repeated, "RE%": m.repeated_pct}),
        RequirementCheck(5, "number of edges", None, {"NoE": m.num_edges}),
    ]


def format_report(checks: list[RequirementCheck]) -> str:
    lines = []
    for c in checks:
        status = {True: "pass", False: "fail", None: "    "}[c.passed]
        vals = ", ".join(f"{k}={v:.6g}" for k, v in c.values.items())
        lines.append(f"Req. {c.number} {c.name:<16} {status}  {vals}")
    return "\n".join(lines)
