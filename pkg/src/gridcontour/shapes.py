"""Reference contours used by the tests, demos and benchmarks."""

from __future__ import annotations

import numpy as np

from .geometry import Contour


def circle(n: int = 64, radius: float = 0.4, center=(0.5, 0.5)) -> Contour:
    t = 2 * np.pi * np.arange(n) / n
    return Contour.from_points(np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)]))


def ellipse(n: int = 64, a: float = 0.4, b: float = 0.2, angle: float = np.pi / 6, center=(0.5, 0.5)) -> Contour:
    """Ellipse with semi-axes ``a`` and ``b``, tilted by ``angle`` radians."""
    t = 2 * np.pi * np.arange(n) / n
    x, y = a * np.cos(t), b * np.sin(t)
    c, s = np.cos(angle), np.sin(angle)
    return Contour.from_points(np.column_stack([center[0] + c * x - s * y, center[1] + s * x + c * y]))


def l_shape(arm: float = 0.4329, leg: float = 0.3771) -> Contour:
    """Unit square with the upper-right block removed; one reflex vertex."""
    return Contour.from_points([(0, 0), (1, 0), (1, leg), (arm, leg), (arm, 1), (0, 1)])


def star(tips: int = 5, outer: float = 0.45, inner: float = 0.2, center=(0.5, 0.5)) -> Contour:
    """Star polygon with ``2 * tips`` vertices, starting at an inner (reflex) vertex."""
    k = np.arange(2 * tips)
    t = np.pi / 2 + np.pi * (k + 1) / tips
    r = np.where(k % 2 == 0, inner, outer)
    return Contour.from_points(np.column_stack([center[0] + r * np.cos(t), center[1] + r * np.sin(t)]))


def rectangle(x0: float = 0.0, y0: float = 0.0, x1: float = 2.0, y1: float = 1.0) -> Contour:
    return Contour.from_points([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


def blob(n: int = 500, radius: float = 0.35, wobble: float = 0.08, lobes: int = 7, center=(0.5, 0.5)) -> Contour:
    """Smooth star-shaped curve ``r = radius + wobble * sin(lobes * t)``, densely sampled."""
    t = 2 * np.pi * np.arange(n) / n
    r = radius + wobble * np.sin(lobes * t)
    return Contour.from_points(np.column_stack([center[0] + r * np.cos(t), center[1] + r * np.sin(t)]))


FIXTURES = {
    "circle": circle,
    "ellipse": ellipse,
    "l_shape": l_shape,
    "star": star,
    "rectangle": rectangle,
}

CONVEX = ("circle", "ellipse", "rectangle")
CONCAVE = ("l_shape", "star")
