"""Grid-node approximation of irregular 2D contours for finite-difference meshes."""

from .classify import Label, Location, NodeClassification, classify_nodes, point_in_polygon, points_in_polygon
from .errors import (
    DegenerateContourError,
    DegenerateDomainError,
    GridBoundsError,
    GridContourError,
    InvalidContourError,
    SnapError,
    TraceError,
)
from .geometry import (
    Contour,
    Orientation,
    Point,
    Polyline,
    area,
    orientation,
    point_to_polyline_distance,
    points_to_polyline_distance,
    signed_area,
)
from .grid import Grid, NodeIndex, build_grid, node_to_world, snap_to_node
from .metrics import (
    DistanceProfile,
    StudyRow,
    area_difference_pct,
    boundary_distance_profile,
    refinement_study,
)
from .tracer import (
    ApproxContour,
    InteriorSide,
    SegmentLine,
    bridge_concavity,
    candidate_nodes,
    interior_side,
    prune_convexity,
    select_next_node,
    trace_contour,
    trace_segment,
)

__version__ = "0.1.0"
