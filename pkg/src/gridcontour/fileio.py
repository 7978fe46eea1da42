"""
Reading contours and writing meshes, tables and SVG drawings.

Every writer produces byte-identical output for identical inputs: fixed
field order, fixed float formatting, sorted records and no timestamps.
Writers accept a filesystem path or an open text stream.
"""

from __future__ import annotations

import contextlib
import csv
import io
import json
import logging
import math
import os
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .classify import Label, NodeClassification
from .errors import DegenerateContourError, InvalidContourError
from .geometry import Contour, normalize_points
from .grid import Grid
from .metrics import DistanceProfile, StudyRow
from .tracer import ApproxContour

logger = logging.getLogger(__name__)

PathOrStream = Union[str, os.PathLike, TextIO]

MESH_MAGIC = "# gridcontour mesh v1"
MESH_HEADER = ("x0", "y0", "xf", "yf", "nx", "ny", "dx", "dy")
STUDY_COLUMNS = ("n", "area_diff_pct", "boundary_nodes", "interior_nodes")
DISTANCE_COLUMNS = ("chain_position", "i", "j", "distance")


class ContourFormatError(InvalidContourError):
    """A contour file could not be parsed."""


def _g17(v: float) -> str:
    return format(float(v), ".17g")


@contextlib.contextmanager
def _open_out(target: PathOrStream):
    if hasattr(target, "write"):
        yield target
        return
    try:
        fh = open(target, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {os.fspath(target)}: {exc.strerror or exc}") from exc
    with fh:
        yield fh


def _parse_number(text: str, where: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise ContourFormatError(f"{where}: non-numeric value {text.strip()!r}") from None
    if not math.isfinite(v):
        raise ContourFormatError(f"{where}: non-finite value {text.strip()!r}")
    return v


def parse_csv_points(text: str) -> np.ndarray:
    """``x,y`` records, one per line; a single header line is allowed."""
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = next(csv.reader([line]))
        where = f"line {lineno}"
        if len(fields) != 2:
            raise ContourFormatError(f"{where}: expected 2 fields 'x,y', got {len(fields)}")
        if not points and lineno == 1:
            try:
                float(fields[0]), float(fields[1])
            except ValueError:
                continue  # header
        points.append((_parse_number(fields[0], where), _parse_number(fields[1], where)))
    return np.array(points, dtype=float).reshape(-1, 2)


def parse_json_points(text: str) -> np.ndarray:
    """A JSON array of ``[x, y]`` pairs."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContourFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ContourFormatError("JSON contour must be an array of [x, y] pairs")
    points = []
    for k, item in enumerate(data):
        where = f"element {k}"
        if not isinstance(item, list) or len(item) != 2:
            raise ContourFormatError(f"{where}: expected a two-element array")
        for v in item:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ContourFormatError(f"{where}: non-numeric value {v!r}")
            if not math.isfinite(v):
                raise ContourFormatError(f"{where}: non-finite value {v!r}")
        points.append((float(item[0]), float(item[1])))
    return np.array(points, dtype=float).reshape(-1, 2)


def load_contour(path: Union[str, os.PathLike], format: Optional[str] = None) -> Contour:
    """Read, normalize and orient a contour from a CSV or JSON points file.

    ``format`` is ``"csv"`` or ``"json"``; by default it follows the file
    extension (``.json`` means JSON, anything else CSV).
    """
    path = Path(path)
    fmt = (format or ("json" if path.suffix.lower() == ".json" else "csv")).lower()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ContourFormatError(f"cannot read {path}: {exc.strerror or exc}") from None
    if fmt == "json":
        raw = parse_json_points(text)
    elif fmt == "csv":
        raw = parse_csv_points(text)
    else:
        raise ValueError(f"unknown contour format {format!r}")

    xy = normalize_points(raw)
    if len(xy) < 3:
        raise ContourFormatError(f"{path}: need at least 3 distinct points, got {len(xy)}")
    try:
        contour = Contour.from_points(xy)
    except DegenerateContourError:
        raise DegenerateContourError(f"{path}: contour encloses zero area") from None
    logger.info("loaded %s: %d points, %s", path, len(contour), contour.orientation.name.lower())
    return contour


def write_contour(contour: Contour, target: PathOrStream) -> None:
    with _open_out(target) as fh:
        fh.write("x,y\n")
        for x, y in contour.points:
            fh.write(f"{float(x)!r},{float(y)!r}\n")


def write_mesh(classification: NodeClassification, approx: ApproxContour, target: PathOrStream) -> None:
    """Grid header plus one ``i,j,x,y,class`` record per node, sorted by ``(j, i)``."""
    grid = classification.grid
    if approx.grid != grid:
        raise ValueError("classification and approximate contour live on different grids")
    values = (grid.x0, grid.y0, grid.xf, grid.yf, grid.nx, grid.ny, grid.dx, grid.dy)
    ii, jj = np.meshgrid(np.arange(grid.nx + 1), np.arange(grid.ny + 1), indexing="xy")
    idx = np.column_stack([ii.ravel(), jj.ravel()])
    xy = grid.node_xy(idx)
    codes = np.array(["E", "I", "B"])[classification.labels[idx[:, 0], idx[:, 1]]]
    buf = io.StringIO()
    buf.write(MESH_MAGIC + "\n")
    buf.write(",".join(MESH_HEADER) + "\n")
    buf.write(",".join(str(v) if isinstance(v, int) else _g17(v) for v in values) + "\n")
    buf.write("i,j,x,y,class\n")
    for (i, j), (x, y), c in zip(idx, xy, codes):
        buf.write(f"{i},{j},{_g17(x)},{_g17(y)},{c}\n")
    with _open_out(target) as fh:
        fh.write(buf.getvalue())


def read_mesh(path: Union[str, os.PathLike]) -> tuple[Grid, np.ndarray, np.ndarray]:
    """Inverse of :func:`write_mesh`: the grid, ``(k, 4)`` records ``i, j, x, y`` and class codes."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != MESH_MAGIC:
        raise ValueError(f"{path}: not a gridcontour mesh file")
    header = dict(zip(lines[1].split(","), lines[2].split(",")))
    grid = Grid(*(float(header[k]) for k in MESH_HEADER[:4]), int(header["nx"]), int(header["ny"]))
    rows = [r.split(",") for r in lines[4:]]
    records = np.array([[float(v) for v in r[:4]] for r in rows])
    codes = np.array([r[4] for r in rows])
    return grid, records, codes


def write_study_csv(rows: Iterable[StudyRow], target: PathOrStream) -> None:
    """One line per level: ``n, area_diff_pct, boundary_nodes, interior_nodes``.

    Failed levels keep their ``n`` with the remaining fields left empty.
    """
    with _open_out(target) as fh:
        fh.write(",".join(STUDY_COLUMNS) + "\n")
        for r in rows:
            if r.ok:
                fh.write(f"{r.n},{r.area_diff_pct!r},{r.boundary_nodes},{r.interior_nodes}\n")
            else:
                fh.write(f"{r.n},,,\n")


def write_distances_csv(profile: DistanceProfile, target: PathOrStream) -> None:
    with _open_out(target) as fh:
        fh.write(",".join(DISTANCE_COLUMNS) + "\n")
        for k, ((i, j), d) in enumerate(zip(profile.nodes, profile.distances)):
            fh.write(f"{k},{int(i)},{int(j)},{float(d)!r}\n")


def _fmt(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def write_svg(
    given: Contour,
    approx: ApproxContour,
    classification: NodeClassification,
    target: PathOrStream,
    width: int = 800,
) -> None:
    """Drawing with four layers: given contour, approximate chain, interior and boundary nodes.

    The viewport is the grid domain plus a 5% margin; y points up.
    """
    grid = classification.grid
    mx = 0.05 * (grid.xf - grid.x0)
    my = 0.05 * (grid.yf - grid.y0)
    vx0, vy0 = grid.x0 - mx, grid.y0 - my
    vw, vh = grid.xf - grid.x0 + 2 * mx, grid.yf - grid.y0 + 2 * my
    height = max(1, round(width * vh / vw))
    r = 0.25 * min(grid.dx, grid.dy)
    stroke = 0.1 * min(grid.dx, grid.dy)

    def pts(xy):
        return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in xy)

    def dots(label):
        xy = grid.node_xy(classification.nodes(label))
        return "".join(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}"/>' for x, y in xy)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_fmt(vx0)} {_fmt(-(vy0 + vh))} {_fmt(vw)} {_fmt(vh)}">',
        '<g transform="scale(1,-1)">',
        f'<g id="given" fill="none" stroke="#1f77b4" stroke-width="{_fmt(stroke)}">'
        f'<polygon points="{pts(given.points)}"/></g>',
        f'<g id="approx" fill="none" stroke="#d62728" stroke-width="{_fmt(stroke)}">'
        f'<polygon points="{pts(approx.world_points())}"/></g>',
        f'<g id="interior" fill="#7f7f7f">{dots(Label.INTERIOR)}</g>',
        f'<g id="boundary" fill="#d62728">{dots(Label.BOUNDARY)}</g>',
        "</g>",
        "</svg>",
    ]
    with _open_out(target) as fh:
        fh.write("\n".join(lines) + "\n")
