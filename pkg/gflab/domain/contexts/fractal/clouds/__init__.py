"""Point clouds of the graph and the range of a sample path, and restriction to a ball."""
import logging
from typing import Optional

import numpy as np

from gflab.domain.contexts.geometry.entities import BallSpec, Box
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.utils.errors import DimensionMismatchError, EmptyIntersectionError

from ..entities import DimensionTarget, PointCloud


logger = logging.getLogger(__name__)

#: Relative slack on the radius when deciding if a grid point is inside a ball.
RADIUS_TOLERANCE = 1e-9


def graph_cloud(path: SamplePath, mask: Optional[np.ndarray] = None) -> PointCloud:
    """Return the graph ``{(t, X_t)}`` of `path`, as points of ``R^{N+d}``.

    With a `mask` of the grid points, only the points it selects are kept.

    Examples
    --------
    >>> grid = GridSpec.of([0], [1], 3)
    >>> path = SamplePath(grid=grid, values=[0.0, 1.0, 0.5], d=1, seed=0, generator={})
    >>> graph_cloud(path).points.tolist()
    [[0.0, 0.0], [0.5, 1.0], [1.0, 0.5]]
    >>> graph_cloud(path, np.array([True, False, True])).size
    2

    """
    points = np.hstack([path.points, path.values])
    return PointCloud(
        dim=path.grid.dimension + path.d,
        points=points if mask is None else points[mask],
        target=DimensionTarget.GRAPH,
    )


def range_cloud(path: SamplePath, mask: Optional[np.ndarray] = None) -> PointCloud:
    """Return the range ``{X_t}`` of `path`, as points of ``R^d``, restricted to `mask` if any."""
    values = path.values.copy() if mask is None else path.values[mask]
    return PointCloud(dim=path.d, points=values, target=DimensionTarget.RANGE)


def ball_mask(grid: GridSpec, ball: BallSpec) -> np.ndarray:
    """Return the mask of the points of `grid` in the Euclidean `ball`, in the order of the grid.

    Examples
    --------
    >>> from gflab.domain.contexts.geometry.entities import Point
    >>> grid = GridSpec.of([0, 0], [1, 1], (3, 3))
    >>> ball_mask(grid, BallSpec(center=Point.of(0.5, 0.5), radius=0.5)).astype(int).tolist()
    [0, 1, 0, 1, 1, 1, 0, 1, 0]

    """
    if ball.dimension != grid.dimension:
        raise DimensionMismatchError(
            f"the ball is in dimension {ball.dimension}, the grid in {grid.dimension}"
        )
    offsets = grid.points() - ball.center.as_array()
    distances = np.sqrt(np.sum(offsets * offsets, axis=1))
    return distances <= ball.radius * (1 + RADIUS_TOLERANCE)


def restrict_ball(path: SamplePath, ball: BallSpec) -> SamplePath:
    """Restrict `path` to the sub-grid of its points in the box bounding `ball`.

    The box bounding a Euclidean ball is its ball for the sup norm: on 1-dimensional grids, the
    sub-grid holds exactly the points of the ball. On larger grids, :obj:`ball_mask` of the
    sub-grid tells the points inside the ball.

    Parameters
    ----------
    path : SamplePath
        The path to restrict.
    ball : BallSpec
        The ball, in the index space of the path.

    Returns
    -------
    SamplePath
        A path on the sub-grid of the points of `path` in the box bounding `ball`, with the
        same seed. Its generator records the ball.

    Raises
    ------
    DimensionMismatchError
        If the ball and the grid are not in the same space.
    EmptyIntersectionError
        If the ball holds fewer than 2 grid points on an axis.

    Examples
    --------
    >>> grid = GridSpec.of([0], [1], 1001)
    >>> path = SamplePath(grid=grid, values=grid.axes()[0], d=1, seed=0, generator={})
    >>> from gflab.domain.contexts.geometry.entities import Point
    >>> restrict_ball(path, BallSpec(center=Point.of(0.5), radius=0.25)).grid.size
    501

    """
    if ball.dimension != path.grid.dimension:
        raise DimensionMismatchError(
            f"the ball is in dimension {ball.dimension}, the path in {path.grid.dimension}"
        )
    radius = ball.radius * (1 + RADIUS_TOLERANCE)
    selections = []
    for axis, center in zip(path.grid.axes(), ball.center.coords):
        inside = np.flatnonzero(np.abs(axis - center) <= radius)
        if len(inside) < 2:
            raise EmptyIntersectionError(
                f"the ball of center {ball.center.coords} and radius {ball.radius:g} holds "
                f"{len(inside)} grid point(s) on an axis"
            )
        selections.append(inside)
    axes = path.grid.axes()
    sub_grid = GridSpec(
        domain=Box.of(
            [axis[inside[0]] for axis, inside in zip(axes, selections)],
            [axis[inside[-1]] for axis, inside in zip(axes, selections)],
        ),
        resolution=tuple(len(inside) for inside in selections),
    )
    values = path.grid_values()[np.ix_(*selections)].reshape(sub_grid.size, path.d)
    logger.debug(
        "Restricted a path of %d points to %d points around %s",
        path.grid.size,
        sub_grid.size,
        ball.center.coords,
    )
    return SamplePath(
        grid=sub_grid,
        values=values,
        d=path.d,
        seed=path.seed,
        generator={
            **path.generator,
            "ball": {"center": list(ball.center.coords), "radius": ball.radius},
        },
    )
