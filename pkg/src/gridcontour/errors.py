"""Exception hierarchy shared by every module of the package."""


class GridContourError(Exception):
    """Base class for all errors raised by ``gridcontour``."""


class InvalidContourError(GridContourError, ValueError):
    """The input point sequence cannot form a contour."""


class DegenerateContourError(InvalidContourError):
    """The contour encloses zero area, so orientation is undefined."""


class DegenerateDomainError(GridContourError, ValueError):
    """The rectangular domain has zero width or height."""


class GridBoundsError(GridContourError, IndexError):
    """A node index falls outside the grid."""


class TraceError(GridContourError, RuntimeError):
    """Boundary tracing could not produce a valid chain.

    ``vertex`` is the index of the given-contour point being processed when
    the failure happened, or ``None`` when it is not attached to one.
    """

    def __init__(self, message, vertex=None):
        if vertex is not None:
            message = f"{message} (given point {vertex})"
        super().__init__(message)
        self.vertex = vertex


class SnapError(TraceError):
    """No admissible grid node exists near a point."""
