"""JSON file formats: point sets, arrangement summaries and route files.

Numbers are written with 9 significant digits and fields in a fixed order,
so serializing a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

import json
import math
from typing import Any, Sequence

from .arrangement import Arrangement, Edge, EdgeKind
from .geometry import Circle, Color, Line, ScenicCurve, WeightedPoint
from .metrics import RouteMetrics, metrics_from_edges, route_metrics

POINTS_SCHEMA = "scenic-points/1"
ROUTE_SCHEMA = "scenic-route/1"
ARRANGEMENT_SCHEMA = "scenic-arrangement/1"


class PointSetError(ValueError):
    """Malformed or invalid point-set file."""


def num(x: float) -> float:
    """Round to 9 significant digits."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite number {x!r}")
    return float(f"{x:.9g}") + 0.0


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def point_record(p: WeightedPoint) -> dict:
    return {"id": p.id, "class": p.color.value, "x": num(p.x), "y": num(p.y), "weight": num(p.w)}


def serialize_points(points: Sequence[WeightedPoint]) -> str:
    return dumps({"schema": POINTS_SCHEMA, "points": [point_record(p) for p in points]})


def points_from_records(records) -> list[WeightedPoint]:
    if not isinstance(records, list):
        raise PointSetError("'points' must be a list")
    points = []
    for k, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise PointSetError(f"point #{k}: expected an object")
        try:
            pid, cls, x, y, w = rec["id"], rec["class"], rec["x"], rec["y"], rec["weight"]
        except KeyError as exc:
            raise PointSetError(f"point #{k}: missing field {exc.args[0]!r}") from None
        if not isinstance(pid, int) or isinstance(pid, bool):
            raise PointSetError(f"point #{k}: id must be an integer")
        if cls not in ("red", "blue"):
            raise PointSetError(f"point {pid}: class must be 'red' or 'blue', got {cls!r}")
        for name, v in (("x", x), ("y", y), ("weight", w)):
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise PointSetError(f"point {pid}: {name} must be a finite number")
        if w <= 0:
            raise PointSetError(f"point {pid}: weight must be positive")
        points.append(WeightedPoint(pid, Color(cls), float(x), float(y), float(w)))
    if len({p.id for p in points}) != len(points):
        raise PointSetError("point ids must be unique")
    if not any(p.color is Color.RED for p in points) or not any(p.color is Color.BLUE for p in points):
        raise PointSetError("both classes required")
    return points


def parse_points(text: str) -> list[WeightedPoint]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointSetError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema") != POINTS_SCHEMA:
        raise PointSetError(f"expected a {POINTS_SCHEMA!r} document")
    return points_from_records(doc.get("points"))


def curve_record(c: ScenicCurve) -> dict:
    rec: dict[str, Any] = {"id": c.id, "pair": list(c.pair), "delta": num(c.delta)}
    s = c.shape
    if isinstance(s, Circle):
        rec.update(kind="circle", cx=num(s.cx), cy=num(s.cy), r=num(s.r))
    else:
        rec.update(kind="line", px=num(s.px), py=num(s.py), dx=num(s.dx), dy=num(s.dy))
    return rec


def curve_from_record(rec: dict) -> ScenicCurve:
    if rec["kind"] == "circle":
        shape = Circle(rec["cx"], rec["cy"], rec["r"])
    else:
        shape = Line(rec["px"], rec["py"], rec["dx"], rec["dy"])
    return ScenicCurve(rec["id"], tuple(rec["pair"]), rec["delta"], shape)


def edge_record(e: Edge) -> dict:
    rec: dict[str, Any] = {
        "id": e.id,
        "u": e.u,
        "v": e.v,
        "kind": e.kind.value,
        "curve": e.curve,
        "length": num(e.length),
    }
    if e.sweep is not None:
        rec.update(cx=num(e.cx), cy=num(e.cy), r=num(e.r), start=num(e.start), sweep=num(e.sweep))
    return rec


def edge_from_record(rec: dict) -> Edge:
    return Edge(
        rec["id"], rec["u"], rec["v"], EdgeKind(rec["kind"]), rec["curve"], rec["length"],
        rec.get("cx"), rec.get("cy"), rec.get("r"), rec.get("start"), rec.get("sweep"),
    )


def metrics_record(m: RouteMetrics) -> dict:
    return {
        "RL": num(m.route_length),
        "NoE": m.num_edges,
        "NoRE": m.num_repeated,
        "RE%": num(m.repeated_pct),
        "WL": num(m.walk_length),
        "complete": m.complete,
        "scenic_only": m.scenic_only,
        "covered_pairs": m.covered_curves,
        "total_pairs": m.total_curves,
        "bridge_length": num(m.bridge_length),
        "repeated_edges": list(m.repeated_edges),
    }


def route_document(route, arr: Arrangement, seed: int | None = None) -> dict:
    """Self-contained route description: landmarks, curves, route graph, metrics."""
    seeds = set(route.seed_edges)
    node_ids = sorted(route.nodes)
    edges = []
    for eid in route.edges:
        rec = edge_record(arr.edges[eid])
        rec["role"] = "seed" if eid in seeds else "connector"
        edges.append(rec)
    return {
        "schema": ROUTE_SCHEMA,
        "algorithm": route.algorithm.value,
        "seed": seed,
        "points": [point_record(p) for p in arr.points],
        "window": [num(v) for v in arr.window],
        "curves": [curve_record(c) for c in arr.curves],
        "nodes": [{"id": n, "x": num(arr.nodes[n].x), "y": num(arr.nodes[n].y)} for n in node_ids],
        "edges": edges,
        "metrics": metrics_record(route_metrics(route, arr)),
    }


def route_document_metrics(doc: dict) -> dict:
    """Recompute the metrics block from a route document's own edge list."""
    rows = [(e["id"], e["u"], e["v"], e["kind"], e["curve"], e["length"]) for e in doc["edges"]]
    return metrics_record(metrics_from_edges(rows, [c["id"] for c in doc["curves"]]))


def parse_route(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointSetError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema") != ROUTE_SCHEMA:
        raise PointSetError(f"expected a {ROUTE_SCHEMA!r} document")
    return doc


def arrangement_document(raw: Arrangement, bridged: Arrangement, full: bool = False) -> dict:
    doc: dict[str, Any] = {
        "schema": ARRANGEMENT_SCHEMA,
        "counts": {
            "curves": len(bridged.curves),
            "nodes": len(bridged.nodes),
            "edges": len(bridged.edges),
            "intersection_nodes": len(raw.intersection_nodes),
            "components_before_bridging": len(raw.components),
            "bridges": len(bridged.bridge_edges),
        },
        "total_length": num(bridged.total_length),
        "bridge_length": num(sum(e.length for e in bridged.bridge_edges)),
        "window": [num(v) for v in bridged.window],
        "curves": [curve_record(c) for c in bridged.curves],
        "bridges": [
            {
                "curves": list(b.curves),
                "from": [num(b.segment[0][0]), num(b.segment[0][1])],
                "to": [num(b.segment[1][0]), num(b.segment[1][1])],
                "length": num(b.length),
            }
            for b in bridged.bridges
        ],
    }
    if full:
        doc["nodes"] = [
            {"id": n.id, "x": num(n.x), "y": num(n.y), "kind": n.kind.value, "curves": sorted(n.curves)}
            for n in bridged.nodes
        ]
        doc["edges"] = [edge_record(e) for e in bridged.edges]
    return doc
