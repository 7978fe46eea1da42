import csv
import math
from pathlib import Path

import numpy as np
import pytest

from gridcontour import (
    ApproxContour,
    Contour,
    DegenerateContourError,
    Grid,
    area_difference_pct,
    boundary_distance_profile,
    build_grid,
    refinement_study,
    trace_contour,
)
from gridcontour.shapes import CONCAVE, CONVEX, FIXTURES, circle, l_shape, rectangle

DATA = Path(__file__).parent / "data"


def _ring(lo, hi):
    ring = [(i, lo) for i in range(lo, hi)] + [(hi, j) for j in range(lo, hi)]
    ring += [(i, hi) for i in range(hi, lo, -1)] + [(lo, j) for j in range(hi, lo, -1)]
    return tuple(ring)


def test_identical_polygons_differ_by_zero():
    c = rectangle(0, 0, 1, 1)
    g = build_grid(c, 10, 10)
    assert area_difference_pct(c, trace_contour(c, g)) == 0.0


def test_four_percent_difference():
    # unit square with two opposite corner cells cut diagonally: 1 - 2 * 0.02 = 0.96
    g = Grid(0, 0, 1, 1, 5, 5)
    chain = [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (4, 5),
             (3, 5), (2, 5), (1, 5), (0, 5), (0, 4), (0, 3), (0, 2), (0, 1)]
    pct = area_difference_pct(rectangle(0, 0, 1, 1), ApproxContour(tuple(chain), g))
    assert pct == pytest.approx(4.0, rel=1e-12)


def test_degenerate_approximation_rejected():
    g = Grid(0, 0, 1, 1, 5, 5)
    with pytest.raises(DegenerateContourError):
        area_difference_pct(rectangle(0, 0, 1, 1), ApproxContour(((0, 0), (1, 1)), g))


def test_translation_invariance():
    c = circle()
    moved = c.translated(123.25, -40.5)
    a = area_difference_pct(c, trace_contour(c, build_grid(c, 60, 60)))
    b = area_difference_pct(moved, trace_contour(moved, build_grid(moved, 60, 60)))
    assert b == pytest.approx(a, rel=1e-9)


def test_distances_zero_on_aligned_rectangle():
    c = rectangle(0, 0, 1, 1)
    prof = boundary_distance_profile(trace_contour(c, build_grid(c, 10, 10)), c)
    assert len(prof) == 40
    assert prof.max == pytest.approx(0.0, abs=1e-15)


def test_one_cell_inset_ring_is_dx_away():
    c = rectangle(0, 0, 1, 1)
    g = Grid(0, 0, 1, 1, 10, 10)
    prof = boundary_distance_profile(ApproxContour(_ring(1, 9), g), c)
    assert np.allclose(prof.distances, 0.1, rtol=1e-12)
    assert prof.mean == pytest.approx(0.1)
    assert prof.entries[0] == ((1, 1), pytest.approx(0.1))


def test_profile_follows_chain_order():
    c = circle()
    a = trace_contour(c, build_grid(c, 40, 40))
    prof = boundary_distance_profile(a, c)
    assert [tuple(n) for n in prof.nodes] == [tuple(n) for n in a.nodes]


def test_rectangle_study_rows():
    rows = refinement_study(rectangle(), [50, 100])
    assert [(r.n, r.area_diff_pct) for r in rows] == [(50, 0.0), (100, 0.0)]
    assert all(r.ok for r in rows)


def test_study_keeps_input_order_and_duplicates():
    rows = refinement_study(l_shape(), [40, 20, 40])
    assert [r.n for r in rows] == [40, 20, 40]
    assert rows[0] == rows[2]


@pytest.mark.parametrize("levels", [[], [1], [10, 2.5]])
def test_study_level_validation(levels):
    with pytest.raises(ValueError):
        refinement_study(circle(), levels)


def test_failed_level_does_not_stop_others():
    thin = Contour.from_points([(0, 0), (1, 0), (0.5, 0.004), (0.5, 0.9), (0.49, 0.9), (0.49, 0.004)])
    rows = refinement_study(thin, [3, 40])
    assert not rows[0].ok and rows[0].boundary_nodes == -1 and math.isnan(rows[0].area_diff_pct)
    assert "need at least 3" in rows[0].error
    assert rows[1].ok


def _golden(name):
    with (DATA / f"{name}_study.golden.csv").open() as fh:
        return [(int(r["n"]), float(r["area_diff_pct"]), int(r["boundary_nodes"]), int(r["interior_nodes"]))
                for r in csv.DictReader(fh)]


@pytest.mark.parametrize("name", ["circle", "ellipse"])
def test_study_matches_golden(name):
    golden = _golden(name)
    rows = refinement_study(FIXTURES[name](), [g[0] for g in golden])
    for row, (n, pct, b, i) in zip(rows, golden):
        assert (row.n, row.boundary_nodes, row.interior_nodes) == (n, b, i)
        assert row.area_diff_pct == pytest.approx(pct, rel=1e-9)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_first_to_last_trend(name):
    rows = refinement_study(FIXTURES[name](), [25, 100])
    assert rows[1].area_diff_pct <= rows[0].area_diff_pct
    if name != "rectangle":
        assert rows[1].area_diff_pct < rows[0].area_diff_pct


@pytest.mark.parametrize("name", ["circle", "ellipse", "l_shape"])
def test_below_two_percent_at_300(name):
    assert refinement_study(FIXTURES[name](), [300])[0].area_diff_pct < 2.0


@pytest.mark.parametrize("name", CONVEX + CONCAVE)
def test_max_distance_shrinks(name):
    c = FIXTURES[name]()
    m = [boundary_distance_profile(trace_contour(c, build_grid(c, n, n)), c).max for n in (50, 300)]
    if name == "rectangle":
        assert m[1] <= 1e-12
    else:
        assert m[1] < m[0]
