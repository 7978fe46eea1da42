"""
Comparisons between a given contour and its grid approximation.

Area difference in percent, per-node distance profiles along the chain,
and the refinement study that tabulates both over several grid sizes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from .classify import classify_nodes
from .errors import DegenerateContourError, GridContourError
from .geometry import Contour, area, points_to_polyline_distance
from .grid import NodeIndex, build_grid
from .tracer import ApproxContour, trace_contour

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StudyRow:
    """One refinement level. ``error`` is set (and the numbers are NaN/-1) when tracing failed."""

    n: int
    area_diff_pct: float
    boundary_nodes: int
    interior_nodes: int
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True, eq=False)
class DistanceProfile:
    nodes: np.ndarray
    distances: np.ndarray

    @property
    def entries(self) -> List[tuple]:
        return [(NodeIndex(int(i), int(j)), float(d)) for (i, j), d in zip(self.nodes, self.distances)]

    @property
    def max(self) -> float:
        return float(self.distances.max())

    @property
    def mean(self) -> float:
        return float(self.distances.mean())

    def __len__(self) -> int:
        return len(self.distances)


def approx_area(approx: ApproxContour) -> float:
    return area(approx.world_points())


def area_difference_pct(given: Contour, approx: ApproxContour) -> float:
    """``100 * | |A_given| - |A_approx| | / |A_given|``."""
    a_given = area(given)
    if a_given == 0:
        raise DegenerateContourError("given contour has zero area")
    if len(set(approx.nodes)) < 3:
        raise DegenerateContourError("approximate contour has fewer than 3 distinct nodes")
    return 100.0 * abs(a_given - approx_area(approx)) / a_given


def boundary_distance_profile(approx: ApproxContour, given: Contour) -> DistanceProfile:
    """Distance from every chain node, in chain order, to the given closed contour."""
    nodes = np.asarray(approx.nodes, dtype=int).reshape(-1, 2)
    d = points_to_polyline_distance(approx.grid.node_xy(nodes), given.as_polyline())
    return DistanceProfile(nodes, d)


def study_level(given: Contour, n: int, padding: float = 0.0) -> StudyRow:
    grid = build_grid(given, n, n, padding)
    approx = trace_contour(given, grid)
    labels = classify_nodes(grid, approx)
    return StudyRow(n, area_difference_pct(given, approx), labels.boundary_count, labels.interior_count)


def refinement_study(given: Contour, levels: Iterable[int], padding: float = 0.0) -> List[StudyRow]:
    """Trace and measure ``given`` on an ``n x n`` grid for each level, in input order.

    A level that fails to trace is reported in its row and does not stop
    the others.
    """
    levels = list(levels)
    if not levels:
        raise ValueError("levels must not be empty")
    for n in levels:
        if int(n) != n or n < 2:
            raise ValueError(f"every level must be an integer >= 2, got {n}")
    rows = []
    for n in levels:
        try:
            rows.append(study_level(given, int(n), padding))
        except GridContourError as exc:
            logger.error("level %d failed: %s", n, exc)
            rows.append(StudyRow(int(n), float("nan"), -1, -1, error=str(exc)))
    return rows
