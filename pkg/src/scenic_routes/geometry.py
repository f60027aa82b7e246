"""Scenic curves for weighted point pairs.

A point ``q`` is scenic for landmarks ``p1`` and ``p2`` when the two
landmarks have the same apparent weight seen from ``q``::

    w1 * |q - p2| == w2 * |q - p1|

For unequal weights the locus is an Apollonius circle that encloses the
lighter landmark; for equal weights it is the perpendicular bisector of the
segment joining them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Union

Point = tuple[float, float]

TWO_PI = 2.0 * math.pi

#: relative tolerance used to decide that two weights are equal
EQUAL_WEIGHT_RTOL = 1e-12
#: tolerance factor applied to a length scale (bounding-box diagonal)
GEOM_RTOL = 1e-9


class DegeneratePairError(ValueError):
    """Raised when the two landmarks of a pair occupy the same position."""


class OffCurveError(ValueError):
    """Raised when a point that must lie on a curve does not."""


class Color(str, enum.Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class WeightedPoint:
    """A landmark: class label, position and a strictly positive weight."""

    id: int
    color: Color
    x: float
    y: float
    w: float

    def __post_init__(self) -> None:
        if not isinstance(self.color, Color):
            object.__setattr__(self, "color", Color(self.color))
        if not (self.w > 0 and math.isfinite(self.w)):
            raise ValueError(f"point {self.id}: weight must be positive, got {self.w!r}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point {self.id}: non-finite coordinates")

    @property
    def xy(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    r: float

    @property
    def center(self) -> Point:
        return (self.cx, self.cy)


@dataclass(frozen=True)
class Line:
    """Infinite line through ``(px, py)`` with unit direction ``(dx, dy)``.

    The direction is canonical: ``dx > 0``, or ``dx == 0`` and ``dy > 0``.
    """

    px: float
    py: float
    dx: float
    dy: float

    def at(self, t: float) -> Point:
        return (self.px + t * self.dx, self.py + t * self.dy)

    def param(self, q: Point) -> float:
        return (q[0] - self.px) * self.dx + (q[1] - self.py) * self.dy


Shape = Union[Circle, Line]


@dataclass(frozen=True)
class ScenicCurve:
    """Scenic locus of one red-blue pair.

    ``delta`` is the weight ratio ``w_red / w_blue``.
    """

    id: int
    pair: tuple[int, int]
    delta: float
    shape: Shape

    @property
    def is_circle(self) -> bool:
        return isinstance(self.shape, Circle)

    @property
    def is_line(self) -> bool:
        return isinstance(self.shape, Line)


def bbox_diagonal(points: Iterable[Point]) -> float:
    xs, ys = zip(*points)
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def scenic_residual(q: Point, p1: WeightedPoint, p2: WeightedPoint) -> float:
    """Return ``|w1 * d2 - w2 * d1|`` for the point ``q``."""
    d1 = math.hypot(q[0] - p1.x, q[1] - p1.y)
    d2 = math.hypot(q[0] - p2.x, q[1] - p2.y)
    return abs(p1.w * d2 - p2.w * d1)


def _canonical_direction(dx: float, dy: float) -> tuple[float, float]:
    norm = math.hypot(dx, dy)
    dx, dy = dx / norm, dy / norm
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    # avoid a signed zero leaking into serialized output
    return (dx + 0.0, dy + 0.0)


def scenic_curve(p1: WeightedPoint, p2: WeightedPoint, curve_id: int = 0) -> ScenicCurve:
    """Construct the scenic locus of a pair of weighted landmarks.

    The circle is built from the two points of the locus that lie on the
    line through the landmarks: the internal and external division points
    of ``p1 p2`` in the ratio ``delta = w1 / w2``.  Its center is their
    midpoint and its radius half their distance.

    The recorded pair is ``(red id, blue id)`` whenever the classes differ,
    and ``delta`` is always the weight of the first pair member over the
    second.

    Raises
    ------
    DegeneratePairError
        If ``p1`` and ``p2`` share a position.
    """
    ux, uy = p2.x - p1.x, p2.y - p1.y
    d = math.hypot(ux, uy)
    if d == 0.0:
        raise DegeneratePairError(f"points {p1.id} and {p2.id} are coincident")

    if p1.color is Color.BLUE and p2.color is Color.RED:
        pair = (p2.id, p1.id)
        delta = p2.w / p1.w
    else:
        pair = (p1.id, p2.id)
        delta = p1.w / p2.w

    if abs(p1.w - p2.w) <= EQUAL_WEIGHT_RTOL * max(p1.w, p2.w):
        mx, my = 0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y)
        dx, dy = _canonical_direction(-uy, ux)
        return ScenicCurve(curve_id, pair, delta, Line(mx, my, dx, dy))

    ratio = p1.w / p2.w
    t_inner = ratio / (1.0 + ratio)
    t_outer = ratio / (ratio - 1.0)
    t_center = 0.5 * (t_inner + t_outer)
    r = 0.5 * abs(t_outer - t_inner) * d
    shape = Circle(p1.x + t_center * ux, p1.y + t_center * uy, r)
    return ScenicCurve(curve_id, pair, delta, shape)


def on_curve_distance(curve: ScenicCurve | Shape, q: Point) -> float:
    """Unsigned distance from ``q`` to the curve."""
    shape = curve.shape if isinstance(curve, ScenicCurve) else curve
    if isinstance(shape, Circle):
        return abs(math.hypot(q[0] - shape.cx, q[1] - shape.cy) - shape.r)
    # cross product of (q - p) with the unit direction
    return abs((q[0] - shape.px) * shape.dy - (q[1] - shape.py) * shape.dx)


def _shape_scale(shape: Shape) -> float:
    if isinstance(shape, Circle):
        return max(shape.r, abs(shape.cx), abs(shape.cy))
    return max(1.0, abs(shape.px), abs(shape.py))


def default_tolerance(*shapes: Shape) -> float:
    return GEOM_RTOL * max(_shape_scale(s) for s in shapes)


def _circle_circle(a: Circle, b: Circle, eps: float) -> list[Point]:
    ex, ey = b.cx - a.cx, b.cy - a.cy
    dist = math.hypot(ex, ey)
    if dist <= eps:
        return []
    if dist > a.r + b.r + eps or dist < abs(a.r - b.r) - eps:
        return []
    ux, uy = ex / dist, ey / dist
    along = (dist * dist + a.r * a.r - b.r * b.r) / (2.0 * dist)
    if abs(dist - (a.r + b.r)) <= eps or abs(dist - abs(a.r - b.r)) <= eps:
        return [(a.cx + along * ux, a.cy + along * uy)]
    h = math.sqrt(max(a.r * a.r - along * along, 0.0))
    mx, my = a.cx + along * ux, a.cy + along * uy
    return [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]


def _line_circle(line: Line, c: Circle, eps: float) -> list[Point]:
    t = line.param(c.center)
    fx, fy = line.at(t)
    s = math.hypot(c.cx - fx, c.cy - fy)
    if s > c.r + eps:
        return []
    if abs(s - c.r) <= eps:
        return [(fx, fy)]
    h = math.sqrt(c.r * c.r - s * s)
    return [line.at(t - h), line.at(t + h)]


def _line_line(a: Line, b: Line) -> list[Point]:
    cross = a.dx * b.dy - a.dy * b.dx
    if abs(cross) <= 1e-12:
        return []
    wx, wy = b.px - a.px, b.py - a.py
    t = (wx * b.dy - wy * b.dx) / cross
    return [a.at(t)]


def intersect(c1: ScenicCurve, c2: ScenicCurve, eps: float | None = None) -> list[Point]:
    """Intersection points of two curves, sorted lexicographically.

    Tangent curves (within ``eps``) produce exactly one point.  Disjoint,
    concentric, parallel or coincident curves produce none.
    """
    a, b = c1.shape, c2.shape
    if eps is None:
        eps = default_tolerance(a, b)
    if isinstance(a, Circle) and isinstance(b, Circle):
        pts = _circle_circle(a, b, eps)
    elif isinstance(a, Line) and isinstance(b, Line):
        pts = _line_line(a, b)
    elif isinstance(a, Line):
        pts = _line_circle(a, b, eps)
    else:
        pts = _line_circle(b, a, eps)
    return sorted(pts)


def angle_of(circle: Circle, q: Point) -> float:
    """Polar angle of ``q`` around the circle center, in ``[0, 2*pi)``."""
    theta = math.atan2(q[1] - circle.cy, q[0] - circle.cx)
    return theta + TWO_PI if theta < 0 else theta


def ccw_sweep(start: float, end: float) -> float:
    """Counterclockwise angular distance from ``start`` to ``end`` in ``[0, 2*pi)``."""
    sweep = math.fmod(end - start, TWO_PI)
    return sweep + TWO_PI if sweep < 0 else sweep


def arc_length(
    curve: ScenicCurve,
    a: Point,
    b: Point,
    side: str = "ccw",
    eps: float | None = None,
) -> float:
    """Length along ``curve`` between the on-curve points ``a`` and ``b``.

    ``side`` selects the arc of a circle: ``"ccw"`` or ``"cw"`` travel from
    ``a`` to ``b`` in that rotational sense, ``"minor"`` and ``"major"``
    pick the shorter or longer of the two.  Lines ignore ``side``.
    """
    shape = curve.shape
    if eps is None:
        eps = default_tolerance(shape)
    for q in (a, b):
        off = on_curve_distance(shape, q)
        if off > eps:
            raise OffCurveError(f"point {q} is {off:.3g} away from curve {curve.id}")
    if isinstance(shape, Line):
        return math.hypot(b[0] - a[0], b[1] - a[1])

    sweep = ccw_sweep(angle_of(shape, a), angle_of(shape, b))
    if side == "ccw":
        alpha = sweep
    elif side == "cw":
        alpha = (TWO_PI - sweep) % TWO_PI
    elif side == "minor":
        alpha = min(sweep, TWO_PI - sweep)
    elif side == "major":
        alpha = max(sweep, TWO_PI - sweep)
    else:
        raise ValueError(f"unknown arc side {side!r}")
    return shape.r * alpha


def sample_curve(curve: ScenicCurve, n: int, half_length: float = 1.0) -> list[Point]:
    """``n`` evenly spaced points on the curve.

    Lines are sampled on the segment of length ``2 * half_length`` centred
    on the stored anchor point.
    """
    shape = curve.shape
    if isinstance(shape, Circle):
        return [
            (shape.cx + shape.r * math.cos(TWO_PI * k / n), shape.cy + shape.r * math.sin(TWO_PI * k / n))
            for k in range(n)
        ]
    step = 2.0 * half_length / max(n - 1, 1)
    return [shape.at(-half_length + k * step) for k in range(n)]


def point_segment_closest(q: Point, a: Point, b: Point) -> Point:
    ex, ey = b[0] - a[0], b[1] - a[1]
    den = ex * ex + ey * ey
    if den == 0.0:
        return a
    t = ((q[0] - a[0]) * ex + (q[1] - a[1]) * ey) / den
    t = min(1.0, max(0.0, t))
    return (a[0] + t * ex, a[1] + t * ey)


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def circle_circle_closest(a: Circle, b: Circle) -> tuple[float, Point, Point]:
    """Closest pair of points between two non-crossing circles."""
    ex, ey = b.cx - a.cx, b.cy - a.cy
    d = math.hypot(ex, ey)
    if d == 0.0:
        ux, uy = 1.0, 0.0
    else:
        ux, uy = ex / d, ey / d
    if d >= a.r + b.r:
        pa = (a.cx + a.r * ux, a.cy + a.r * uy)
        pb = (b.cx - b.r * ux, b.cy - b.r * uy)
    else:
        # nested: both near points lie on the ray from the larger center
        # through the smaller one
        if a.r >= b.r:
            pa = (a.cx + a.r * ux, a.cy + a.r * uy)
            pb = (b.cx + b.r * ux, b.cy + b.r * uy)
        else:
            pa = (a.cx - a.r * ux, a.cy - a.r * uy)
            pb = (b.cx - b.r * ux, b.cy - b.r * uy)
    return dist(pa, pb), pa, pb


def circle_segment_closest(c: Circle, s0: Point, s1: Point) -> tuple[float, Point, Point]:
    """Closest pair (circle point, segment point) for a segment not crossing the circle."""
    f = point_segment_closest(c.center, s0, s1)
    d0, d1, df = dist(s0, c.center), dist(s1, c.center), dist(f, c.center)
    if df >= c.r:
        q = f
    else:
        # segment lies inside the circle; the farthest endpoint is closest to it
        q = s0 if d0 >= d1 else s1
    dq = dist(q, c.center)
    if dq == 0.0:
        p = (c.cx + c.r, c.cy)
    else:
        p = (c.cx + c.r * (q[0] - c.cx) / dq, c.cy + c.r * (q[1] - c.cy) / dq)
    return dist(p, q), p, q


def segment_segment_closest(
    a0: Point, a1: Point, b0: Point, b1: Point
) -> tuple[float, Point, Point]:
    """Closest pair between two non-crossing segments."""
    candidates = [
        (a0, point_segment_closest(a0, b0, b1)),
        (a1, point_segment_closest(a1, b0, b1)),
        (point_segment_closest(b0, a0, a1), b0),
        (point_segment_closest(b1, a0, a1), b1),
    ]
    best = min(candidates, key=lambda pq: dist(*pq))
    return dist(*best), best[0], best[1]

