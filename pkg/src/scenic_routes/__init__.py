"""Scenic paths and scenic routes over weighted two-class point sets."""

from .arrangement import (
    Arrangement,
    BridgeCandidate,
    Edge,
    EdgeKind,
    Node,
    NodeKind,
    bridge_components,
    build_arrangement,
    build_bridged,
    connected_components,
)
from .geometry import (
    Circle,
    Color,
    DegeneratePairError,
    Line,
    OffCurveError,
    ScenicCurve,
    WeightedPoint,
    arc_length,
    intersect,
    scenic_curve,
)
from .metrics import RouteMetrics, requirement_report, route_metrics
from .routes import Algorithm, Route, acch_route, acu_route, convex_hull, dpe_route, seed_edges
from .shortest_paths import ApspTable, DisconnectedGraphError, compute_apsp, reconstruct_path

__all__ = [
    "Algorithm", "ApspTable", "Arrangement", "BridgeCandidate", "Circle", "Color",
    "DegeneratePairError", "DisconnectedGraphError", "Edge", "EdgeKind", "Line", "Node",
    "NodeKind", "OffCurveError", "Route", "RouteMetrics", "ScenicCurve", "WeightedPoint",
    "acch_route", "acu_route", "arc_length", "bridge_components", "build_arrangement",
    "build_bridged", "compute_apsp", "connected_components", "convex_hull", "dpe_route",
    "intersect", "reconstruct_path", "requirement_report", "route_metrics", "scenic_curve",
    "seed_edges",
]
