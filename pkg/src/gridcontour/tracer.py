"""
Staircase approximation of a polygon by a closed chain of grid nodes.

The given contour is walked edge by edge. Along each edge the chain grows
one node at a time, choosing among the (at most three) forward neighbours
the one that stays on the interior side of the edge's supporting line and
lies closest to it. Two corrections run at the vertices:

* trailing nodes that ended up strictly outside the polygon (outward
  turns) are removed, see :func:`prune_convexity`;
* when the last node sits on the wrong side of the next edge (inward
  turns) one extra node is inserted so the next edge starts from an
  admissible node, see :func:`bridge_concavity`.
"""

from __future__ import annotations

import enum
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .classify import Location, point_in_polygon
from .errors import DegenerateContourError, SnapError, TraceError
from .geometry import Contour, Orientation, Point
from .grid import Grid, NodeIndex, snap_to_node

logger = logging.getLogger(__name__)

#: Points closer than this fraction of the cell size to a line count as on it.
LINE_TOL = 1e-9


class InteriorSide(enum.Enum):
    ABOVE = "above"
    BELOW = "below"
    LEFT = "left"
    RIGHT = "right"
    INHERIT_PREVIOUS = "inherit"


@dataclass(frozen=True)
class SegmentLine:
    """The line through a given-contour edge, anchored at the edge start."""

    anchor: Point
    vx: float
    vy: float

    def __post_init__(self):
        if self.vx == 0 and self.vy == 0:
            raise DegenerateContourError("segment has zero length")

    @classmethod
    def between(cls, a, b) -> "SegmentLine":
        return cls(Point(float(a[0]), float(a[1])), float(b[0]) - float(a[0]), float(b[1]) - float(a[1]))

    @property
    def vertical(self) -> bool:
        return self.vx == 0

    @property
    def slope(self) -> Optional[float]:
        """``vy / vx``, or ``None`` for a vertical segment."""
        return None if self.vx == 0 else self.vy / self.vx

    def f(self, x: float) -> float:
        """Ordinate of the line at abscissa ``x``."""
        if self.vx == 0:
            raise ValueError("f is undefined on a vertical line")
        return self.anchor.y + (x - self.anchor.x) * self.vy / self.vx

    def g(self, y: float) -> float:
        """Abscissa of the line at ordinate ``y`` (inverse of :meth:`f`)."""
        if self.vy == 0:
            raise ValueError("g is undefined on a horizontal line")
        return self.anchor.x + (y - self.anchor.y) * self.vx / self.vy

    def signed_distance(self, xy) -> np.ndarray:
        """Perpendicular distance, positive on the left of the direction of travel."""
        p = np.asarray(xy, dtype=float).reshape(-1, 2)
        cross = self.vx * (p[:, 1] - self.anchor.y) - self.vy * (p[:, 0] - self.anchor.x)
        return cross / math.hypot(self.vx, self.vy)


def interior_side(
    seg: SegmentLine,
    orientation: Orientation,
    previous_side: Optional[InteriorSide] = None,
    axis: Optional[str] = None,
) -> InteriorSide:
    """Which side of ``seg`` holds the polygon interior.

    ``axis="vertical"`` answers above/below from the sign of ``vx``;
    ``axis="horizontal"`` answers left/right from the sign of ``vy``. By
    default the vertical answer is used whenever ``vx != 0``. A zero
    delta on the queried axis keeps ``previous_side``.
    """
    if axis is None:
        axis = "vertical" if seg.vx != 0 else "horizontal"
    ccw = orientation is Orientation.COUNTERCLOCKWISE
    if axis == "vertical":
        delta, pos, neg = seg.vx, InteriorSide.ABOVE, InteriorSide.BELOW
    elif axis == "horizontal":
        delta, pos, neg = seg.vy, InteriorSide.LEFT, InteriorSide.RIGHT
    else:
        raise ValueError(f"axis must be 'vertical' or 'horizontal', got {axis!r}")
    if delta == 0:
        if previous_side is None or previous_side is InteriorSide.INHERIT_PREVIOUS:
            raise DegenerateContourError("no previous side to inherit for an axis-degenerate segment")
        return previous_side
    if not ccw:
        pos, neg = neg, pos
    return pos if delta > 0 else neg


def resolve_sides(
    segments: Sequence[SegmentLine], orientation: Orientation, axis: str
) -> List[InteriorSide]:
    """Interior side of every segment on one axis, inheriting across zero deltas.

    A leading run of zero deltas takes the side of the first segment that
    has a nonzero one.
    """
    delta = [s.vx if axis == "vertical" else s.vy for s in segments]
    first = next((k for k, d in enumerate(delta) if d != 0), None)
    if first is None:
        raise DegenerateContourError(f"no segment moves along the {axis} axis")
    seed = interior_side(segments[first], orientation, axis=axis)
    sides, prev = [], seed
    for s in segments:
        prev = interior_side(s, orientation, prev, axis=axis)
        sides.append(prev)
    return sides


def _side_sign(seg: SegmentLine, side: InteriorSide) -> float:
    """+1 when ``side`` is the left of the direction of travel, -1 for the right."""
    if side in (InteriorSide.ABOVE, InteriorSide.BELOW):
        if seg.vx == 0:
            raise ValueError("above/below is undefined for a vertical segment")
        s = math.copysign(1.0, seg.vx)
        return s if side is InteriorSide.ABOVE else -s
    if side in (InteriorSide.LEFT, InteriorSide.RIGHT):
        if seg.vy == 0:
            raise ValueError("left/right is undefined for a horizontal segment")
        # travelling up, the left half-plane is x < g(y)
        s = math.copysign(1.0, seg.vy)
        return s if side is InteriorSide.LEFT else -s
    raise ValueError(f"unresolved interior side {side}")


def admissible(xy, seg: SegmentLine, side: InteriorSide, tol: float) -> np.ndarray:
    """Whether points lie on the interior side of ``seg`` or within ``tol`` of it."""
    return _side_sign(seg, side) * seg.signed_distance(xy) >= -tol


def candidate_nodes(current, sx: int, sy: int, grid: Optional[Grid] = None) -> List[NodeIndex]:
    """Forward neighbours of ``current`` for step signs ``sx``, ``sy``.

    Order is x-step, y-step, diagonal. Out-of-bounds candidates are dropped.
    """
    if sx == 0 and sy == 0:
        raise ValueError("at least one step sign must be nonzero")
    i, j = current
    if sx and sy:
        cands = [NodeIndex(i + sx, j), NodeIndex(i, j + sy), NodeIndex(i + sx, j + sy)]
    else:
        cands = [NodeIndex(i + sx, j + sy)]
    if grid is not None:
        cands = [c for c in cands if grid.contains(c)]
    if not cands:
        raise TraceError(f"every candidate step from node {tuple(current)} leaves the grid")
    return cands


def _tolerance(grid: Grid) -> float:
    return LINE_TOL * max(grid.dx, grid.dy)


def _pick_closest(cands, dist, ok, rank, tol):
    best = None
    for k, c in enumerate(cands):
        if not ok[k]:
            continue
        key = (dist[k], rank[k])
        if best is None or dist[k] < best[0][0] - tol or (abs(dist[k] - best[0][0]) <= tol and rank[k] < best[0][1]):
            best = (key, c)
    return None if best is None else best[1]


def _step_rank(current, c) -> int:
    # preference on distance ties: diagonal, then x-step, then y-step
    di, dj = c[0] - current[0], c[1] - current[1]
    if di and dj:
        return 0
    return 1 if di else 2


def select_next_node(
    current,
    candidates: Sequence[NodeIndex],
    seg: SegmentLine,
    side: InteriorSide,
    grid: Grid,
    segment_index: Optional[int] = None,
) -> NodeIndex:
    """Admissible candidate closest to the segment's line.

    A candidate is admissible when it lies on the interior side of the
    line or on it. Equal distances prefer the diagonal, then the x-step.
    """
    if seg.vx == 0 or seg.vy == 0:
        raise ValueError("axis-aligned segments are stepped directly, not selected")
    cands = list(candidates)
    if not cands:
        raise TraceError("no candidate nodes", segment_index)
    tol = _tolerance(grid)
    xy = grid.node_xy(cands)
    ok = admissible(xy, seg, side, tol)
    dist = np.abs(seg.signed_distance(xy))
    rank = [_step_rank(current, c) for c in cands]
    pick = _pick_closest(cands, dist, ok, rank, tol)
    if pick is None:
        raise TraceError(
            f"no admissible step from node {tuple(current)}; geometry thinner than one cell?",
            segment_index,
        )
    return pick


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def trace_segment(
    last_node,
    seg: SegmentLine,
    target,
    side: InteriorSide,
    grid: Grid,
    segment_index: Optional[int] = None,
) -> List[NodeIndex]:
    """Nodes from ``last_node`` (exclusive) towards ``target`` along ``seg``.

    Stepping continues while the remaining gap, measured in the direction
    of travel, is at least one cell on either axis.
    """
    dx, dy = grid.dx, grid.dy
    tol = _tolerance(grid)
    sx, sy = _sign(seg.vx), _sign(seg.vy)
    tx, ty = float(target[0]), float(target[1])
    guard = 4 * (grid.nx + grid.ny)
    out: List[NodeIndex] = []
    node = NodeIndex(*last_node)

    def remaining(n):
        x, y = grid.node_xy([n])[0]
        return (tx - x) * sx, (ty - y) * sy

    while True:
        rx, ry = remaining(node)
        if sx == 0:
            go = ry >= dy - tol
        elif sy == 0:
            go = rx >= dx - tol
        else:
            go = rx >= dx - tol or ry >= dy - tol
        if not go:
            break
        if sx == 0 or sy == 0:
            node = candidate_nodes(node, sx, sy, grid)[0]
        else:
            node = select_next_node(node, candidate_nodes(node, sx, sy, grid), seg, side, grid, segment_index)
        out.append(node)
        if len(out) > guard:
            raise TraceError("segment tracing did not terminate", segment_index)
    return out


def prune_convexity(
    chain: Sequence[NodeIndex],
    given: Contour,
    grid: Grid,
    segment_index: Optional[int] = None,
) -> List[NodeIndex]:
    """Drop trailing nodes that lie strictly outside the given contour."""
    chain = list(chain)
    tol = _tolerance(grid)
    while chain:
        x, y = grid.node_xy([chain[-1]])[0]
        if point_in_polygon((x, y), given, tol=tol) is not Location.OUTSIDE:
            return chain
        chain.pop()
    raise TraceError("pruning removed every node of the chain", segment_index)


_NEIGHBOURS = [(di, dj) for dj in (-1, 0, 1) for di in (-1, 0, 1) if di or dj]


def bridge_concavity(
    chain: Sequence[NodeIndex],
    next_seg: SegmentLine,
    next_side: InteriorSide,
    grid: Grid,
    segment_index: Optional[int] = None,
) -> List[NodeIndex]:
    """Append a node when the chain's last node is a bad start for ``next_seg``.

    The last node is a bad start when it lies strictly on the exterior side
    of the next line. The bridge node is chosen among the neighbours that
    do not step backwards along the next line: the admissible one closest
    to the line, preferring the smallest forward advance on ties. Normally
    one node suffices; when pruning left the chain end more than a cell
    from the line, the walk first steps towards the interior side.
    """
    chain = list(chain)
    if not chain:
        raise TraceError("cannot bridge an empty chain", segment_index)
    tol = _tolerance(grid)
    sign = _side_sign(next_seg, next_side)
    guard = 4 * (grid.nx + grid.ny)
    for _ in range(guard):
        last = chain[-1]
        if admissible(grid.node_xy([last]), next_seg, next_side, tol)[0]:
            return chain
        cands, advance = [], []
        for di, dj in _NEIGHBOURS:
            c = NodeIndex(last[0] + di, last[1] + dj)
            fwd = di * next_seg.vx * grid.dx + dj * next_seg.vy * grid.dy
            if fwd >= 0 and grid.contains(c):
                cands.append(c)
                advance.append(fwd)
        if not cands:
            break
        xy = grid.node_xy(cands)
        ok = admissible(xy, next_seg, next_side, tol)
        dist = np.abs(next_seg.signed_distance(xy))
        order = np.argsort(advance, kind="stable")
        rank = np.empty(len(cands), dtype=int)
        rank[order] = np.arange(len(cands))
        pick = _pick_closest(cands, dist, ok, rank, tol)
        if pick is None:
            depth = sign * next_seg.signed_distance(xy)
            pick = cands[int(np.lexsort((rank, -depth))[0])]
        chain.append(pick)
    raise TraceError(f"could not bridge node {tuple(chain[-1])} onto the next segment", segment_index)


@dataclass(frozen=True)
class TraceEvent:
    """A vertex correction applied while tracing.

    ``kind`` is ``"prune"`` (nodes removed) or ``"bridge"`` (nodes added);
    ``vertex`` is the given-contour index the edge being processed ends at.
    """

    kind: str
    vertex: int
    nodes: tuple


@dataclass(frozen=True, eq=False)
class ApproxContour:
    """Closed, 8-connected chain of grid nodes; the last node links back to the first."""

    nodes: tuple
    grid: Grid
    events: tuple = field(default=())

    def __len__(self) -> int:
        return len(self.nodes)

    def world_points(self) -> np.ndarray:
        return self.grid.node_xy(np.asarray(self.nodes, dtype=int).reshape(-1, 2))

    def repeated_nodes(self) -> List[NodeIndex]:
        """Nodes visited more than once (the chain touches itself there)."""
        counts = Counter(self.nodes)
        return sorted(n for n, c in counts.items() if c > 1)

    def events_of(self, kind: str) -> List[TraceEvent]:
        return [e for e in self.events if e.kind == kind]


def chain_problems(nodes: Sequence, grid: Grid) -> List[str]:
    """Violations of the closed-chain invariants; empty when the chain is valid."""
    problems = []
    if len(nodes) < 3:
        return [f"chain has {len(nodes)} nodes, need at least 3"]
    for k, n in enumerate(nodes):
        if not grid.contains(n):
            problems.append(f"node {k} {tuple(n)} out of bounds")
        m = nodes[(k + 1) % len(nodes)]
        di, dj = abs(m[0] - n[0]), abs(m[1] - n[1])
        if di == 0 and dj == 0:
            problems.append(f"nodes {k} and {(k + 1) % len(nodes)} are identical")
        elif di > 1 or dj > 1:
            problems.append(f"nodes {k} and {(k + 1) % len(nodes)} are not 8-adjacent")
    return problems


def _adjacent(a, b) -> bool:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1])) <= 1


def _close_chain(chain, seg, side, grid, vertex):
    """Walk from the chain's end back to its first node."""
    first = chain[0]
    tol = _tolerance(grid)
    guard = 4 * (grid.nx + grid.ny)
    steps = 0
    while chain[-1] != first and not _adjacent(chain[-1], first):
        last = chain[-1]
        sx, sy = _sign(first[0] - last[0]), _sign(first[1] - last[1])
        cands = candidate_nodes(last, sx, sy, grid)
        xy = grid.node_xy(cands)
        ok = admissible(xy, seg, side, tol)
        if not ok.any():
            ok[:] = True
        dist = np.abs(seg.signed_distance(xy))
        rank = [_step_rank(last, c) for c in cands]
        chain.append(_pick_closest(cands, dist, ok, rank, tol))
        steps += 1
        if steps > guard:
            raise TraceError("closing the chain did not terminate", vertex)
    if len(chain) > 1 and chain[-1] == first:
        chain.pop()
    return chain


def _collapse(nodes: List[NodeIndex]) -> List[NodeIndex]:
    """Remove consecutive duplicates and out-and-back spurs (``A, B, A``), cyclically."""

    def one_pass(seq):
        out = []
        for n in seq:
            if out and out[-1] == n:
                continue
            if len(out) >= 2 and out[-2] == n:
                out.pop()
                continue
            out.append(n)
        return out

    while True:
        size = len(nodes)
        nodes = one_pass(nodes)
        # a second pass over a rotated copy catches patterns spanning the seam
        half = len(nodes) // 2
        nodes = one_pass(nodes[half:] + nodes[:half])
        nodes = nodes[len(nodes) - half:] + nodes[:len(nodes) - half]
        if len(nodes) == size or len(nodes) <= 2:
            return nodes


def trace_contour(given: Contour, grid: Grid) -> ApproxContour:
    """Approximate ``given`` by a closed chain of nodes of ``grid``."""
    pts = given.points
    m = len(pts)
    dx, dy = grid.dx, grid.dy
    tol = _tolerance(grid)
    orient = given.orientation

    try:
        start = snap_to_node(grid, pts[0], prefer_inside_of=given, tol=tol)
    except SnapError as exc:
        raise SnapError(str(exc), 0) from None
    chain: List[NodeIndex] = [start]
    events: List[TraceEvent] = []
    seg = side = None

    for k in range(1, m + 1):
        vertex = k % m
        seg = SegmentLine.between(pts[k - 1], pts[vertex])
        side = interior_side(seg, orient, side)
        lx, ly = grid.node_xy([chain[-1]])[0]
        n_x = math.floor((abs(pts[vertex][0] - lx) + tol) / dx)
        n_y = math.floor((abs(pts[vertex][1] - ly) + tol) / dy)
        if n_x < 1 and n_y < 1:
            continue
        size = len(chain)
        chain = bridge_concavity(chain, seg, side, grid, vertex)
        if len(chain) > size:
            events.append(TraceEvent("bridge", k - 1, tuple(chain[size:])))
        chain.extend(trace_segment(chain[-1], seg, pts[vertex], side, grid, vertex))
        kept = prune_convexity(chain, given, grid, vertex)
        if len(kept) < len(chain):
            events.append(TraceEvent("prune", vertex, tuple(chain[len(kept):])))
        chain = kept

    chain = _close_chain(chain, seg, side, grid, 0)
    chain = _collapse(chain)
    problems = chain_problems(chain, grid)
    if problems:
        raise TraceError("traced chain is invalid: " + "; ".join(problems[:3]))
    result = ApproxContour(tuple(chain), grid, tuple(events))
    repeated = result.repeated_nodes()
    if repeated:
        logger.warning("approximate contour touches itself at %d node(s): %s", len(repeated), repeated)
    return result
