import numpy as np
import pytest

from gridcontour import (
    ApproxContour,
    area,
    Grid,
    InvalidContourError,
    Label,
    Location,
    build_grid,
    classify_nodes,
    point_in_polygon,
    points_in_polygon,
    trace_contour,
)
from gridcontour.shapes import FIXTURES, rectangle

import oracle

UNIT = [(0, 0), (1, 0), (1, 1), (0, 1)]


@pytest.mark.parametrize(
    "p, loc",
    [((0.5, 0.5), Location.INSIDE), ((2, 2), Location.OUTSIDE), ((1, 0.5), Location.ON_BOUNDARY), ((0, 0), Location.ON_BOUNDARY)],
)
def test_point_in_unit_square(p, loc):
    assert point_in_polygon(p, UNIT) is loc


def test_ray_through_vertex_counts_once():
    diamond = [(1, 0), (2, 1), (1, 2), (0, 1)]
    assert point_in_polygon((0.5, 1), diamond) is Location.INSIDE
    assert point_in_polygon((-0.5, 1), diamond) is Location.OUTSIDE
    assert points_in_polygon([(0.5, 1), (-0.5, 1), (2.5, 1)], diamond).tolist() == [True, False, False]


def test_degenerate_polygon_rejected():
    with pytest.raises(InvalidContourError):
        point_in_polygon((0, 0), [(0, 0), (1, 1)])


def _square_chain(lo, hi):
    ring = [(i, lo) for i in range(lo, hi)] + [(hi, j) for j in range(lo, hi)]
    ring += [(i, hi) for i in range(hi, lo, -1)] + [(lo, j) for j in range(hi, lo, -1)]
    return tuple(ring)


def test_three_cell_square():
    g = Grid(0, 0, 5, 5, 5, 5)
    labels = classify_nodes(g, ApproxContour(_square_chain(1, 4), g))
    assert labels.boundary_count == 12
    assert labels.interior_count == 4
    assert labels.exterior_count == 36 - 16
    assert labels.nodes(Label.INTERIOR).tolist() == [[2, 2], [3, 2], [2, 3], [3, 3]]


@pytest.mark.parametrize("nx, ny", [(2, 2), (7, 3), (20, 20)])
def test_full_frame_chain(nx, ny):
    c = rectangle(0, 0, 1, 1)
    g = build_grid(c, nx, ny)
    labels = classify_nodes(g, trace_contour(c, g))
    assert labels.interior_count == (nx - 1) * (ny - 1)
    assert labels.exterior_count == 0


def test_labels_are_read_only():
    g = Grid(0, 0, 5, 5, 5, 5)
    labels = classify_nodes(g, ApproxContour(_square_chain(1, 4), g))
    with pytest.raises(ValueError):
        labels.labels[0, 0] = 1


def test_broken_chain_rejected():
    g = Grid(0, 0, 5, 5, 5, 5)
    with pytest.raises(InvalidContourError):
        classify_nodes(g, ApproxContour(((0, 0), (2, 0), (2, 2)), g))
    with pytest.raises(InvalidContourError):
        classify_nodes(g, ApproxContour(((0, 0), (1, 1)), g))


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("n", [20, 50])
def test_matches_node_by_node_ray_cast(name, n):
    c = FIXTURES[name]()
    g = build_grid(c, n, n)
    a = trace_contour(c, g)
    labels = classify_nodes(g, a)
    assert np.array_equal(labels.labels, oracle.brute_force_labels(g, a.nodes))


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("n", [30, 101, 200])
def test_matches_flood_fill(name, n):
    c = FIXTURES[name]()
    g = build_grid(c, n, n, padding=0.05)
    a = trace_contour(c, g)
    labels = classify_nodes(g, a)
    assert np.array_equal(labels.labels, oracle.flood_fill_labels(g.nx, g.ny, a.nodes))


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("n", [50, 100, 200])
def test_pick_theorem(name, n):
    # for a simple lattice polygon: area = I + B/2 - 1 in cell units
    c = FIXTURES[name]()
    g = build_grid(c, n, n)
    a = trace_contour(c, g)
    assert not a.repeated_nodes()
    labels = classify_nodes(g, a)
    nodes = np.asarray(a.nodes)
    cells = abs(oracle.shoelace([tuple(p) for p in nodes]))
    assert cells == labels.interior_count + oracle.F(labels.boundary_count, 2) - 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("n", [100, 200])
def test_node_counts_track_area(name, n):
    c = FIXTURES[name]()
    g = build_grid(c, n, n)
    labels = classify_nodes(g, trace_contour(c, g))
    expected = area(c) / (g.dx * g.dy)
    ratio = (labels.interior_count + labels.boundary_count / 2) / expected
    assert 0.9 <= ratio <= 1.1
