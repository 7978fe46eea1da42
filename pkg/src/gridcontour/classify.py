"""
Point-in-polygon tests and boundary/interior/exterior labelling of grid nodes.

The polygon used for labelling is the approximate contour itself: its
nodes are boundary nodes, and every other node is interior or exterior
according to the even-odd rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DegenerateContourError, InvalidContourError
from .geometry import Contour, Polyline, as_xy, points_to_polyline_distance, signed_area

if TYPE_CHECKING:
    from .grid import Grid
    from .tracer import ApproxContour

BOUNDARY_TOL = 1e-12


class Location(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "on_boundary"


class Label(enum.IntEnum):
    EXTERIOR = 0
    INTERIOR = 1
    BOUNDARY = 2

    @property
    def code(self) -> str:
        return "EIB"[self.value]


def _polygon_xy(polygon) -> np.ndarray:
    xy = polygon.points if isinstance(polygon, Contour) else as_xy(polygon)
    if len(xy) < 3:
        raise InvalidContourError(f"polygon needs at least 3 vertices, got {len(xy)}")
    return xy


def _crossings(xy: np.ndarray, y: float) -> np.ndarray:
    """Abscissae where the horizontal line at ``y`` crosses polygon edges.

    An edge counts when exactly one endpoint lies strictly above ``y``
    (lower endpoint inclusive), so shared vertices are never counted twice.
    """
    x0, y0 = xy[:, 0], xy[:, 1]
    x1, y1 = np.roll(x0, -1), np.roll(y0, -1)
    hit = (y0 > y) != (y1 > y)
    x0, y0, x1, y1 = x0[hit], y0[hit], x1[hit], y1[hit]
    return x0 + (y - y0) * (x1 - x0) / (y1 - y0)


def point_in_polygon(p, polygon, tol: float = BOUNDARY_TOL) -> Location:
    """Classify ``p`` against a closed polygon with even-odd ray casting.

    Points within ``tol`` of an edge are reported as ``ON_BOUNDARY``.
    """
    xy = _polygon_xy(polygon)
    px, py = float(p[0]), float(p[1])
    if points_to_polyline_distance([(px, py)], Polyline(xy, closed=True))[0] <= tol:
        return Location.ON_BOUNDARY
    xs = _crossings(xy, py)
    return Location.INSIDE if np.count_nonzero(xs > px) % 2 else Location.OUTSIDE


def points_in_polygon(points, polygon) -> np.ndarray:
    """Even-odd inside mask for many points, without a boundary band.

    Points sharing an ordinate reuse one set of edge crossings.
    """
    xy = _polygon_xy(polygon)
    p = np.atleast_2d(np.asarray(points, dtype=float))
    inside = np.zeros(len(p), dtype=bool)
    ys, inverse = np.unique(p[:, 1], return_inverse=True)
    for k, y in enumerate(ys):
        rows = np.flatnonzero(inverse == k)
        xs = np.sort(_crossings(xy, y))
        right = len(xs) - np.searchsorted(xs, p[rows, 0], side="right")
        inside[rows] = right % 2 == 1
    return inside


@dataclass(frozen=True, eq=False)
class NodeClassification:
    """Labels for all ``(nx + 1) * (ny + 1)`` nodes, indexed ``labels[i, j]``."""

    grid: "Grid"
    labels: np.ndarray

    @property
    def boundary_count(self) -> int:
        return int(np.count_nonzero(self.labels == Label.BOUNDARY))

    @property
    def interior_count(self) -> int:
        return int(np.count_nonzero(self.labels == Label.INTERIOR))

    @property
    def exterior_count(self) -> int:
        return int(np.count_nonzero(self.labels == Label.EXTERIOR))

    def nodes(self, label: Label) -> np.ndarray:
        """``(k, 2)`` array of ``(i, j)`` indices carrying ``label``, sorted by ``(j, i)``."""
        i, j = np.nonzero(self.labels.T == label)[::-1]
        return np.column_stack([i, j])


def classify_nodes(grid: "Grid", approx: "ApproxContour") -> NodeClassification:
    """Label every grid node as boundary, interior or exterior."""
    nodes = np.asarray(approx.nodes, dtype=int).reshape(-1, 2)
    if len(nodes) < 3:
        raise InvalidContourError("approximate contour has fewer than 3 nodes")
    step = np.abs(nodes - np.roll(nodes, -1, axis=0))
    if step.max() > 1 or (step.sum(axis=1) == 0).any():
        raise InvalidContourError("approximate contour is not a closed 8-connected chain")
    poly = grid.node_xy(nodes)
    if signed_area(poly) == 0.0:
        raise DegenerateContourError("approximate contour encloses zero area")

    ii, jj = np.meshgrid(np.arange(grid.nx + 1), np.arange(grid.ny + 1), indexing="ij")
    idx = np.column_stack([ii.ravel(), jj.ravel()])
    inside = points_in_polygon(grid.node_xy(idx), poly).reshape(ii.shape)

    labels = np.where(inside, Label.INTERIOR, Label.EXTERIOR).astype(np.int8)
    labels[nodes[:, 0], nodes[:, 1]] = Label.BOUNDARY
    labels.setflags(write=False)
    return NodeClassification(grid, labels)

