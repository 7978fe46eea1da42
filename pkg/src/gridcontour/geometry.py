"""
Planar primitives in world coordinates.

Points, closed contours and open/closed polylines, the shoelace (Gauss)
area, orientation detection and point-to-polyline distances. Everything
here is a pure function of immutable inputs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import DegenerateContourError, InvalidContourError

DUPLICATE_TOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class Orientation(enum.Enum):
    CLOCKWISE = "cw"
    COUNTERCLOCKWISE = "ccw"


def as_xy(points) -> np.ndarray:
    """Coerce a point sequence to a finite ``(n, 2)`` float array."""
    xy = np.asarray(points, dtype=float)
    if xy.ndim != 2 or xy.shape[1] != 2:
        raise InvalidContourError(f"expected an (n, 2) array of points, got shape {xy.shape}")
    bad = ~np.isfinite(xy).all(axis=1)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise InvalidContourError(f"point {k} is not finite: {tuple(xy[k])}")
    return xy


def normalize_points(points, tol: float = DUPLICATE_TOL) -> np.ndarray:
    """Merge consecutive duplicates and drop a repeated closing point.

    The result is the open representation used throughout the package:
    the edge from the last point back to the first is implicit.
    """
    xy = as_xy(points)
    keep = [0] if len(xy) else []
    for k in range(1, len(xy)):
        if np.max(np.abs(xy[k] - xy[keep[-1]])) > tol:
            keep.append(k)
    xy = xy[keep]
    while len(xy) > 1 and np.max(np.abs(xy[-1] - xy[0])) <= tol:
        xy = xy[:-1]
    return xy


def _shoelace_sum(xy: np.ndarray) -> float:
    # measuring from the lowest vertex avoids cancellation far from the origin;
    # picking it by value keeps the sum independent of start vertex and direction
    k = np.lexsort((xy[:, 1], xy[:, 0]))[0]
    rel = xy - xy[k]
    x, y = rel[:, 0], rel[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    # fsum is exactly rounded, so reversal and rotation give bit-identical magnitudes
    return math.fsum(x * yn - xn * y)


def _orientation_from_sum(total: float) -> Orientation:
    if total == 0.0:
        raise DegenerateContourError("contour encloses zero area; orientation is undefined")
    return Orientation.COUNTERCLOCKWISE if total > 0 else Orientation.CLOCKWISE


@dataclass(frozen=True, eq=False)
class Contour:
    """A closed polygon stored open, with its detected orientation.

    Build instances with :meth:`from_points`, which normalizes the input.
    """

    points: np.ndarray
    orientation: Orientation

    @classmethod
    def from_points(cls, points) -> "Contour":
        xy = normalize_points(points)
        if len(xy) < 3:
            raise InvalidContourError(f"a contour needs at least 3 distinct points, got {len(xy)}")
        orient = _orientation_from_sum(_shoelace_sum(xy))
        xy = xy.copy()
        xy.setflags(write=False)
        return cls(xy, orient)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, k: int) -> Point:
        return Point(*map(float, self.points[k]))

    def reversed(self, keep_start: bool = True) -> "Contour":
        """The same polygon traversed the other way round.

        With ``keep_start`` the first vertex stays first.
        """
        xy = self.points[::-1]
        if keep_start:
            xy = np.roll(xy, 1, axis=0)
        return Contour.from_points(xy)

    def translated(self, ox: float, oy: float) -> "Contour":
        return Contour.from_points(self.points + np.array([ox, oy]))

    def bounds(self) -> tuple[float, float, float, float]:
        lo = self.points.min(axis=0)
        hi = self.points.max(axis=0)
        return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

    def as_polyline(self) -> "Polyline":
        return Polyline(self.points, closed=True)


@dataclass(frozen=True, eq=False)
class Polyline:
    points: np.ndarray
    closed: bool = False

    def __post_init__(self):
        xy = as_xy(self.points)
        if len(xy) < 2:
            raise InvalidContourError("a polyline needs at least 2 points")
        if (np.abs(np.diff(xy, axis=0)).max(axis=1) == 0).any():
            raise InvalidContourError("polyline has consecutive identical points")
        object.__setattr__(self, "points", xy)

    def segments(self) -> tuple[np.ndarray, np.ndarray]:
        """Start and end points of every segment, closing edge included when closed."""
        a = self.points
        if self.closed:
            return a, np.roll(a, -1, axis=0)
        return a[:-1], a[1:]


PointsLike = Union[Contour, Sequence[Sequence[float]], np.ndarray]


def _points_of(contour: PointsLike) -> np.ndarray:
    if isinstance(contour, Contour):
        return contour.points
    return as_xy(contour)


def signed_area(contour: PointsLike) -> float:
    """Shoelace area, positive for counter-clockwise vertex order."""
    xy = _points_of(contour)
    if len(xy) < 3:
        raise InvalidContourError(f"area needs at least 3 points, got {len(xy)}")
    return 0.5 * _shoelace_sum(xy)


def area(contour: PointsLike) -> float:
    return abs(signed_area(contour))


def orientation(points: PointsLike) -> Orientation:
    xy = _points_of(points)
    if len(xy) < 3:
        raise InvalidContourError(f"orientation needs at least 3 points, got {len(xy)}")
    return _orientation_from_sum(_shoelace_sum(xy))


def points_to_polyline_distance(points, line: Polyline, chunk: int = 4096) -> np.ndarray:
    """Vectorized :func:`point_to_polyline_distance` over an ``(k, 2)`` array."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    a, b = line.segments()
    ab = b - a
    len2 = np.einsum("ij,ij->i", ab, ab)
    out = np.empty(len(p))
    for s in range(0, len(p), chunk):
        q = p[s:s + chunk, None, :]
        ap = q - a[None, :, :]
        t = np.clip(np.einsum("kij,ij->ki", ap, ab) / len2, 0.0, 1.0)
        foot = a[None, :, :] + t[..., None] * ab[None, :, :]
        d = np.hypot(q[..., 0] - foot[..., 0], q[..., 1] - foot[..., 1])
        out[s:s + chunk] = d.min(axis=1)
    return out


def point_to_polyline_distance(p, line: Polyline) -> float:
    """Minimum Euclidean distance from ``p`` to any segment of ``line``.

    Each segment is handled by projecting onto its supporting line and
    clamping the foot to the segment endpoints.
    """
    return float(points_to_polyline_distance([tuple(p)], line)[0])
