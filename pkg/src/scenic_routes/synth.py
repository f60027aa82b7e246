"""Synthetic two-class layouts (grid, line, split line, split circle).

Red points get weight 1 and blue points weight ``delta``; only the ratio
matters for the shape of the arrangement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .geometry import Color, WeightedPoint


class Shape(str, enum.Enum):
    GRID_ALTERNATING = "grid_alternating"
    LINE_ALTERNATING = "line_alternating"
    HALFLINE_SPLIT = "halfline_split"
    HALFCIRCLE_SPLIT = "halfcircle_split"


DEFAULT_DELTA = {
    Shape.GRID_ALTERNATING: 0.5,
    Shape.LINE_ALTERNATING: 0.75,
    Shape.HALFLINE_SPLIT: 0.75,
    Shape.HALFCIRCLE_SPLIT: 0.5,
}
DEFAULT_COUNT = {
    Shape.GRID_ALTERNATING: 8,
    Shape.LINE_ALTERNATING: 4,
    Shape.HALFLINE_SPLIT: 4,
    Shape.HALFCIRCLE_SPLIT: 4,
}


@dataclass(frozen=True)
class SynthConfig:
    """Layout parameters; ``count`` is the number of points per class."""

    shape: Shape
    count: int | None = None
    spacing: float = 10.0
    radius: float = 20.0
    delta: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", Shape(self.shape))
        if self.count is None:
            object.__setattr__(self, "count", DEFAULT_COUNT[self.shape])
        if self.delta is None:
            object.__setattr__(self, "delta", DEFAULT_DELTA[self.shape])
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if not (self.spacing > 0 and self.radius > 0):
            raise ValueError("spacing and radius must be positive")


def grid_shape(cells: int) -> tuple[int, int]:
    """(rows, cols) with cols the smallest divisor of ``cells`` >= sqrt(cells)."""
    cols = math.isqrt(cells)
    if cols * cols < cells:
        cols += 1
    while cells % cols:
        cols += 1
    return cells // cols, cols


def generate_synthetic(cfg: SynthConfig) -> list[WeightedPoint]:
    n = cfg.count
    weight = {Color.RED: 1.0, Color.BLUE: float(cfg.delta)}
    coords: list[tuple[Color, float, float]] = []
    if cfg.shape is Shape.GRID_ALTERNATING:
        rows, cols = grid_shape(2 * n)
        for i in range(rows):
            for j in range(cols):
                color = Color.RED if (i + j) % 2 == 0 else Color.BLUE
                coords.append((color, j * cfg.spacing, i * cfg.spacing))
    elif cfg.shape is Shape.LINE_ALTERNATING:
        for i in range(2 * n):
            coords.append((Color.RED if i % 2 == 0 else Color.BLUE, i * cfg.spacing, 0.0))
    elif cfg.shape is Shape.HALFLINE_SPLIT:
        for i in range(2 * n):
            coords.append((Color.RED if i < n else Color.BLUE, i * cfg.spacing, 0.0))
    else:
        # reds on the upper semicircle, blues on the lower one
        for i in range(n):
            theta = math.pi * (i + 0.5) / n
            coords.append((Color.RED, cfg.radius * math.cos(theta), cfg.radius * math.sin(theta)))
        for i in range(n):
            theta = math.pi + math.pi * (i + 0.5) / n
            coords.append((Color.BLUE, cfg.radius * math.cos(theta), cfg.radius * math.sin(theta)))
    return [WeightedPoint(i, c, x + 0.0, y + 0.0, weight[c]) for i, (c, x, y) in enumerate(coords)]
