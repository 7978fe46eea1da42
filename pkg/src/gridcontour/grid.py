"""
Uniform rectangular grid over the domain [x0, xf] x [y0, yf].

Node ``(i, j)`` sits at ``(x0 + i*dx, y0 + j*dy)``. World coordinates are
always recomputed from integer indices so long node chains never drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .classify import Location, point_in_polygon
from .errors import DegenerateDomainError, GridBoundsError, SnapError
from .geometry import Contour, Point


class NodeIndex(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class Grid:
    x0: float
    y0: float
    xf: float
    yf: float
    nx: int
    ny: int

    def __post_init__(self):
        if int(self.nx) != self.nx or int(self.ny) != self.ny or self.nx < 1 or self.ny < 1:
            raise ValueError(f"partition counts must be positive integers, got nx={self.nx}, ny={self.ny}")
        if not all(math.isfinite(v) for v in (self.x0, self.y0, self.xf, self.yf)):
            raise DegenerateDomainError("domain bounds must be finite")
        if not (self.xf > self.x0 and self.yf > self.y0):
            raise DegenerateDomainError(
                f"domain [{self.x0}, {self.xf}] x [{self.y0}, {self.yf}] has zero width or height"
            )

    @property
    def dx(self) -> float:
        return (self.xf - self.x0) / self.nx

    @property
    def dy(self) -> float:
        return (self.yf - self.y0) / self.ny

    @property
    def shape(self) -> tuple[int, int]:
        """Number of nodes along x and y."""
        return self.nx + 1, self.ny + 1

    def contains(self, n) -> bool:
        return 0 <= n[0] <= self.nx and 0 <= n[1] <= self.ny

    def node_xy(self, nodes) -> np.ndarray:
        """World coordinates of an ``(k, 2)`` array of node indices."""
        idx = np.asarray(nodes).reshape(-1, 2)
        i, j = idx[:, 0], idx[:, 1]
        # the far frame maps onto xf/yf exactly rather than x0 + nx*dx
        x = np.where(i == self.nx, self.xf, self.x0 + i * self.dx)
        y = np.where(j == self.ny, self.yf, self.y0 + j * self.dy)
        return np.column_stack([x, y]).astype(float)

    def nearest_index(self, p) -> NodeIndex:
        """Nearest node by rounding each axis, ties rounded up; not clamped."""
        i = math.floor((p[0] - self.x0) / self.dx + 0.5)
        j = math.floor((p[1] - self.y0) / self.dy + 0.5)
        return NodeIndex(i, j)


def build_grid(contour: Contour, nx: int, ny: int, padding: float = 0.0) -> Grid:
    """Grid over the contour's bounding box grown by ``padding`` on every side."""
    if int(nx) != nx or int(ny) != ny or nx < 2 or ny < 2:
        raise ValueError(f"nx and ny must be integers >= 2, got nx={nx}, ny={ny}")
    if not padding >= 0:
        raise ValueError(f"padding must be >= 0, got {padding}")
    xmin, ymin, xmax, ymax = contour.bounds()
    if padding == 0 and (xmax <= xmin or ymax <= ymin):
        raise DegenerateDomainError("contour bounding box has zero width or height")
    return Grid(xmin - padding, ymin - padding, xmax + padding, ymax + padding, int(nx), int(ny))


def node_to_world(grid: Grid, n) -> Point:
    if not grid.contains(n):
        raise GridBoundsError(f"node {tuple(n)} outside grid 0..{grid.nx} x 0..{grid.ny}")
    x, y = grid.node_xy([n])[0]
    return Point(float(x), float(y))


SNAP_REACH = 3


def snap_to_node(
    grid: Grid,
    p,
    prefer_inside_of: Optional[Contour] = None,
    tol: Optional[float] = None,
) -> NodeIndex:
    """Snap a world point to a grid node.

    Without a preference this is plain per-axis rounding. With
    ``prefer_inside_of`` the nearest node inside or on the contour is
    returned, searching up to ``SNAP_REACH`` cells away from the point's
    cell; ``tol`` is the on-boundary band used for that test (defaults to
    a tiny fraction of the cell size). Equidistant nodes are ranked by the
    rounding rule.
    """
    near = grid.nearest_index(p)
    if prefer_inside_of is None:
        if not grid.contains(near):
            raise GridBoundsError(f"point {tuple(p)} lies outside the grid domain")
        return near
    if tol is None:
        tol = 1e-9 * max(grid.dx, grid.dy)

    fi = math.floor((p[0] - grid.x0) / grid.dx)
    fj = math.floor((p[1] - grid.y0) / grid.dy)
    span = range(-SNAP_REACH + 1, SNAP_REACH + 1)
    cells = [NodeIndex(fi + a, fj + b) for b in span for a in span]
    cells = [n for n in cells if grid.contains(n)]
    xy = grid.node_xy(cells) if cells else np.empty((0, 2))
    # distances equal up to rounding count as ties, settled by the rounding rule
    quantum = 1e-9 * max(grid.dx, grid.dy)
    dist = np.rint(np.hypot(xy[:, 0] - p[0], xy[:, 1] - p[1]) / quantum)
    order = sorted(
        range(len(cells)),
        key=lambda k: (dist[k], cells[k] != near, cells[k].i != near.i, cells[k].j != near.j, cells[k]),
    )
    for k in order:
        if point_in_polygon(xy[k], prefer_inside_of, tol=tol) is not Location.OUTSIDE:
            return cells[k]
    raise SnapError(f"no grid node inside the contour within {SNAP_REACH} cells of point {tuple(map(float, p))}")
