"""SVG 1.1 rendering of arrangements and routes.

Color convention: scenic paths green, seed edges magenta, connecting
edges bluish green, repeated edges overlaid in yellow, bridges not on the
route dashed grey.  Landmarks are dots in their class color, sized by
weight.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence
from xml.sax.saxutils import escape

from .arrangement import Arrangement, Edge, EdgeKind, Window, curve_extent
from .geometry import Circle, Color, Point, ScenicCurve, WeightedPoint
from .metrics import peel_repeated

GREEN = "#2ca02c"
MAGENTA = "#ff00ff"
BLUISH_GREEN = "#009e73"
YELLOW = "#ffd700"
GREY = "#888888"
CLASS_COLORS = {Color.RED: "#d62728", Color.BLUE: "#1f5fbf"}
WIDTH_PX = 800


def _f(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _view_box(points: Sequence[WeightedPoint], curves: Sequence[ScenicCurve], extra: Iterable[Point]) -> Window:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    for c in curves:
        if isinstance(c.shape, Circle):
            xs += [c.shape.cx - c.shape.r, c.shape.cx + c.shape.r]
            ys += [c.shape.cy - c.shape.r, c.shape.cy + c.shape.r]
    for x, y in extra:
        xs.append(x)
        ys.append(y)
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = 0.05 * span
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def _edge_path(e: Edge, pos: Mapping[int, Point]) -> str:
    if e.sweep is None:
        (x0, y0), (x1, y1) = pos[e.u], pos[e.v]
        return f"M {_f(x0)} {_f(-y0)} L {_f(x1)} {_f(-y1)}"

    def at(theta: float) -> tuple[float, float]:
        return (e.cx + e.r * math.cos(theta), -(e.cy + e.r * math.sin(theta)))

    # y is flipped, so a counterclockwise arc in data space has sweep-flag 0
    parts = []
    pieces = 2 if e.sweep > math.pi else 1
    step = e.sweep / pieces
    x, y = at(e.start)
    parts.append(f"M {_f(x)} {_f(y)}")
    for k in range(1, pieces + 1):
        x, y = at(e.start + k * step)
        parts.append(f"A {_f(e.r)} {_f(e.r)} 0 0 0 {_f(x)} {_f(y)}")
    return " ".join(parts)


def _curve_element(c: ScenicCurve, window: Window) -> str:
    if isinstance(c.shape, Circle):
        s = c.shape
        return f'<circle cx="{_f(s.cx)}" cy="{_f(-s.cy)}" r="{_f(s.r)}" data-curve="{c.id}"/>'
    (x0, y0), (x1, y1) = curve_extent(c, window)
    return f'<line x1="{_f(x0)}" y1="{_f(-y0)}" x2="{_f(x1)}" y2="{_f(-y1)}" data-curve="{c.id}"/>'


def render_scene(
    points: Sequence[WeightedPoint],
    curves: Sequence[ScenicCurve],
    window: Window,
    positions: Mapping[int, Point],
    route_edges: Sequence[Edge] = (),
    seed_ids: Iterable[int] = (),
    other_bridges: Sequence[Edge] = (),
    title: str = "",
) -> str:
    seeds = set(seed_ids)
    repeated = set(peel_repeated((e.id, e.u, e.v) for e in route_edges))
    used_nodes = {n for e in route_edges for n in (e.u, e.v)} | {n for e in other_bridges for n in (e.u, e.v)}
    box = _view_box(points, curves, (positions[n] for n in sorted(used_nodes)))
    w, h = box[2] - box[0], box[3] - box[1]
    unit = max(w, h)
    thin, thick = 0.0015 * unit, 0.004 * unit
    height_px = max(1, round(WIDTH_PX * h / w))
    wmax = max(p.w for p in points)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH_PX}" height="{height_px}" '
        f'viewBox="{_f(box[0])} {_f(-box[3])} {_f(w)} {_f(h)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="{_f(box[0])}" y="{_f(-box[3])}" width="{_f(w)}" height="{_f(h)}" fill="#ffffff"/>')

    out.append(f'<g id="scenic-paths" fill="none" stroke="{GREEN}" stroke-width="{_f(thin)}">')
    out += [_curve_element(c, window) for c in curves]
    out.append("</g>")

    if other_bridges:
        out.append(
            f'<g id="bridges" fill="none" stroke="{GREY}" stroke-width="{_f(thin)}" '
            f'stroke-dasharray="{_f(4 * thin)} {_f(2 * thin)}">'
        )
        out += [f'<path d="{_edge_path(e, positions)}" data-edge="{e.id}"/>' for e in other_bridges]
        out.append("</g>")

    layers = (
        ("route-seed", MAGENTA, thick, [e for e in route_edges if e.id in seeds]),
        ("route-connector", BLUISH_GREEN, thick, [e for e in route_edges if e.id not in seeds]),
        ("route-repeated", YELLOW, 0.6 * thick, [e for e in route_edges if e.id in repeated]),
    )
    for name, color, width, edges in layers:
        if not edges:
            continue
        out.append(
            f'<g id="{name}" fill="none" stroke="{color}" stroke-width="{_f(width)}" stroke-linecap="round">'
        )
        out += [f'<path d="{_edge_path(e, positions)}" data-edge="{e.id}"/>' for e in edges]
        out.append("</g>")

    out.append('<g id="landmarks" stroke="#000000" stroke-width="{}">'.format(_f(0.3 * thin)))
    for p in points:
        r = unit * (0.006 + 0.008 * p.w / wmax)
        out.append(
            f'<circle cx="{_f(p.x)}" cy="{_f(-p.y)}" r="{_f(r)}" fill="{CLASS_COLORS[p.color]}" '
            f'data-point="{p.id}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(arr: Arrangement, route=None) -> str:
    """SVG of the arrangement, with ``route`` highlighted when given."""
    positions = {n.id: n.xy for n in arr.nodes}
    route_edges = [arr.edges[e] for e in route.edges] if route is not None else []
    on_route = {e.id for e in route_edges}
    others = [e for e in arr.edges if e.kind is EdgeKind.BRIDGE and e.id not in on_route]
    title = f"{route.algorithm.name} route" if route is not None else "scenic arrangement"
    return render_scene(
        arr.points, arr.curves, arr.window, positions, route_edges,
        route.seed_edges if route is not None else (), others, title,
    )


def render_route_document(doc: dict) -> str:
    """SVG from a route file alone, without rebuilding the arrangement."""
    from .fileio import points_from_records, curve_from_record, edge_from_record

    points = points_from_records(doc["points"])
    curves = [curve_from_record(c) for c in doc["curves"]]
    positions = {n["id"]: (n["x"], n["y"]) for n in doc["nodes"]}
    edges = [edge_from_record(e) for e in doc["edges"]]
    seeds = [e["id"] for e in doc["edges"] if e.get("role") == "seed"]
    title = f"{doc['algorithm'].upper()} route"
    return render_scene(points, curves, tuple(doc["window"]), positions, edges, seeds, (), title)
