"""Box counting, and box-counting dimensions of clouds and graphs, globally or in balls."""
import enum
import itertools
import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.stats import linregress

from gflab.domain.contexts.exponents.estimation import check_ladder
from gflab.domain.contexts.geometry.entities import BallSpec, Point
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.utils.entity import validate_positive_integer, validate_positive_real
from gflab.domain.utils.errors import (
    DimensionMismatchError,
    InsufficientDataError,
    NoValidWindowError,
    OutOfDomainError,
)

from ..clouds import ball_mask, graph_cloud, range_cloud, restrict_ball
from ..entities import DimensionEstimate, DimensionTarget, PointCloud, WindowPolicy


logger = logging.getLogger(__name__)

#: Least number of scales of a ladder.
MIN_SCALES = 5

#: Least number of points for a dimension.
MIN_POINTS = 100

#: Least number of grid points in a ball for a localized dimension.
MIN_BALL_POINTS = 256

#: Default scales of a localized dimension, as fractions of the diameter of the ball.
DEFAULT_SCALE_FRACTIONS = tuple(2.0 ** -k for k in range(2, 13))

#: Slack on the number of cells of an axis, for rounding errors.
_CELL_SLACK = 1e-9

ScaleLadder = Tuple[float, ...]


class Counting(enum.Enum):
    """How the boxes covering a graph or a range are counted."""

    #: Cells holding a point of the cloud.
    CELLS = "cells"
    #: Cells crossed by the interpolated graph above each column.
    COLUMNS = "columns"
    #: Cells of the value axis crossed by the values of each cell of the grid.
    INTERVALS = "intervals"


def _cells_on_axis(extent: float, delta: float) -> int:
    return max(int(np.ceil(extent / delta - _CELL_SLACK)), 1)


def _cell_indices(values: np.ndarray, lower: float, extent: float, delta: float) -> np.ndarray:
    # The top edge of the last cell is closed.
    indices = np.floor((values - lower) / delta).astype(np.int64)
    return np.clip(indices, 0, _cells_on_axis(extent, delta) - 1)


def dyadic_scales(extent: float, finest: float) -> ScaleLadder:
    """Return the scales ``2⁻ᵏ·extent``, ``k ≥ 1``, down to `finest`.

    Examples
    --------
    >>> dyadic_scales(1.0, 0.1)
    (0.5, 0.25, 0.125)

    """
    validate_positive_real(extent, False, "extent")
    validate_positive_real(finest, False, "finest")
    scales: List[float] = []
    exponent = 1
    while extent * 2.0 ** -exponent >= finest:
        scales.append(extent * 2.0 ** -exponent)
        exponent += 1
    return tuple(scales)


def check_scales(scale_ladder: Sequence[float]) -> ScaleLadder:
    """Return `scale_ladder` as a tuple, checking it can give a slope.

    Raises
    ------
    ValueError
        If the scales are not strictly decreasing positive reals.
    InsufficientDataError
        If there are fewer than :obj:`MIN_SCALES` scales.

    """
    scales = tuple(float(scale) for scale in scale_ladder)
    for scale in scales:
        validate_positive_real(scale, False, "scale_ladder")
    if any(later >= earlier for earlier, later in zip(scales, scales[1:])):
        raise ValueError("scale_ladder must be strictly decreasing")
    if len(scales) < MIN_SCALES:
        raise InsufficientDataError(
            f"{len(scales)} scales given, at least {MIN_SCALES} are needed"
        )
    return scales


def box_count(cloud: PointCloud, delta: float) -> int:
    """Count the cells of side `delta` holding a point of `cloud`.

    The cells are the ones of the axis-aligned grid anchored at the lower corner of the bounding
    box of the cloud. The top edges of the bounding box are closed: a point on it belongs to the
    last cell of its axis.

    Examples
    --------
    >>> segment = PointCloud(dim=2, points=[[k / 1024, 0] for k in range(1025)])
    >>> box_count(segment, 1 / 8)
    8
    >>> box_count(PointCloud(dim=3, points=[[1, 2, 3]]), 0.01)
    1

    """
    validate_positive_real(delta, False, "delta")
    lower = cloud.lower
    sides = cloud.sides
    indices = np.stack(
        [
            _cell_indices(cloud.points[:, axis], lower[axis], sides[axis], delta)
            for axis in range(cloud.dim)
        ],
        axis=1,
    )
    return int(len(np.unique(indices, axis=0)))


def _column_strides(grid: GridSpec, delta: float, column_samples: Optional[int]) -> List[int]:
    if column_samples is None:
        return [1] * grid.dimension
    validate_positive_integer(column_samples, False, "column_samples")
    return [
        int(min(max(np.floor(delta / (column_samples * step) + _CELL_SLACK), 1), count - 1))
        for step, count in zip(grid.spacing, grid.resolution)
    ]


def _corners(array: np.ndarray) -> List[np.ndarray]:
    # the 2^N corners of each cell of a grid-shaped array
    cell_shape = tuple(count - 1 for count in array.shape)
    return [
        array[tuple(slice(offset, offset + size) for offset, size in zip(offsets, cell_shape))]
        for offsets in itertools.product((0, 1), repeat=array.ndim)
    ]


def _scalar_cells(
    path: SamplePath, mask: Optional[np.ndarray], strides: Sequence[int]
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, List[np.ndarray], np.ndarray]:
    """Return the values kept by `mask`, and the extremes at the corners of the kept cells.

    The grid is thinned to one point in `strides` on each axis; a cell is kept when `mask`
    holds its ``2^N`` corners. The axes of the thinned grid and the mask of the kept cells come
    last.

    Raises
    ------
    DimensionMismatchError
        If the field has more than one coordinate.
    InsufficientDataError
        If `mask` holds no cell.

    """
    if path.d != 1:
        raise DimensionMismatchError("counting cells needs a field with one coordinate")
    keep = tuple(slice(None, None, stride) for stride in strides)
    values = path.grid_values()[..., 0][keep]
    axes = [axis[::stride] for axis, stride in zip(path.grid.axes(), strides)]
    corners = _corners(values)
    inside = np.ones(corners[0].shape, dtype=bool)
    if mask is not None:
        grid_mask = np.asarray(mask, dtype=bool).reshape(path.grid.resolution)[keep]
        values = values[grid_mask]
        inside = np.logical_and.reduce(_corners(grid_mask))
        if not inside.any():
            raise InsufficientDataError("the mask holds no cell of the grid")
    low = np.min(corners, axis=0)[inside]
    high = np.max(corners, axis=0)[inside]
    return values, low, high, axes, inside


def graph_box_count(
    path: SamplePath,
    delta: float,
    column_samples: Optional[int] = None,
    mask: Optional[np.ndarray] = None,
) -> int:
    """Count the cells of side `delta` crossed by the graph of a scalar field above each column.

    The index space is cut in columns of side `delta` anchored at the lower corner of the domain
    of the grid. Each cell of the grid goes to the column of its lower corner, with the values at
    its ``2^N`` corners: the number of value cells between the smallest and the largest of them
    is the number of boxes above the column. Counting points only would miss the boxes crossed
    between two samples, as soon as the increments are larger than `delta`.

    With `column_samples`, the grid is first thinned so that a column spans about that many grid
    steps on each axis. The oscillation seen in a column then comes from the same number of
    samples at every scale, and the sampling does not flatten the finest scales of a ladder.
    With a `mask` of the grid points, only the cells whose corners it holds are counted.

    Raises
    ------
    DimensionMismatchError
        If the field has more than one coordinate.

    Examples
    --------
    >>> from gflab.domain.contexts.sampler.entities import GridSpec
    >>> grid = GridSpec.of([0], [1], 3)
    >>> jump = SamplePath(grid=grid, values=[0.0, 0.0, 1.0], d=1, seed=0, generator={})
    >>> graph_box_count(jump, 0.5)
    3

    """
    validate_positive_real(delta, False, "delta")
    grid = path.grid
    strides = _column_strides(grid, delta, column_samples)
    values, low, high, axes, inside = _scalar_cells(path, mask, strides)
    columns = np.meshgrid(
        *(
            _cell_indices(axis[:-1], axis[0], length, delta)
            for axis, length in zip(axes, grid.domain.lengths)
        ),
        indexing="ij",
    )
    _, column_of_cell = np.unique(
        np.stack([column[inside] for column in columns], axis=1),
        axis=0,
        return_inverse=True,
    )
    column_of_cell = column_of_cell.ravel()
    column_count = int(column_of_cell.max()) + 1
    column_low = np.full(column_count, np.inf)
    column_high = np.full(column_count, -np.inf)
    np.minimum.at(column_low, column_of_cell, low)
    np.maximum.at(column_high, column_of_cell, high)
    value_low = float(values.min())
    value_extent = float(values.max()) - value_low
    crossed = (
        _cell_indices(column_high, value_low, value_extent, delta)
        - _cell_indices(column_low, value_low, value_extent, delta)
        + 1
    )
    return int(crossed.sum())


def range_box_count(path: SamplePath, delta: float, mask: Optional[np.ndarray] = None) -> int:
    """Count the cells of side `delta` of the value axis crossed by a scalar field.

    Each cell of the grid covers the interval between the smallest and the largest values at its
    corners, as the field is continuous. The cells of the value axis are anchored at the smallest
    value. With a `mask` of the grid points, only the cells whose corners it holds are counted.

    Raises
    ------
    DimensionMismatchError
        If the field has more than one coordinate.

    Examples
    --------
    >>> from gflab.domain.contexts.sampler.entities import GridSpec
    >>> grid = GridSpec.of([0], [1], 4)
    >>> path = SamplePath(grid=grid, values=[0.0, 0.1, 1.0, 2.0], d=1, seed=0, generator={})
    >>> range_box_count(path, 0.25)
    8
    >>> range_box_count(path, 0.25, mask=np.array([True, True, False, True]))
    1

    """
    validate_positive_real(delta, False, "delta")
    values, low, high, _, _ = _scalar_cells(path, mask, [1] * path.grid.dimension)
    value_low = float(values.min())
    value_extent = float(values.max()) - value_low
    cells = _cells_on_axis(value_extent, delta)
    # a cell of the value axis is crossed when more intervals start than end up to it
    marks = np.zeros(cells + 1, dtype=np.int64)
    np.add.at(marks, _cell_indices(low, value_low, value_extent, delta), 1)
    np.add.at(marks, _cell_indices(high, value_low, value_extent, delta) + 1, -1)
    return int(np.count_nonzero(np.cumsum(marks)[:cells]))


def select_window(valid: np.ndarray, policy: WindowPolicy) -> Tuple[int, int]:
    """Return the longest run ``[start, stop)`` of valid scales, the finest one on ties.

    Raises
    ------
    NoValidWindowError
        If the longest run has fewer than ``policy.min_scales`` scales.

    Examples
    --------
    >>> select_window(np.array([False, True, True, True, False, True]), WindowPolicy())
    (1, 4)

    """
    best = (0, 0)
    start = None
    for index, is_valid in enumerate(list(valid) + [False]):
        if is_valid and start is None:
            start = index
        elif not is_valid and start is not None:
            if index - start >= best[1] - best[0]:
                best = (start, index)
            start = None
    if best[1] - best[0] < policy.min_scales:
        raise NoValidWindowError(
            f"the longest run of valid scales has {best[1] - best[0]} scale(s), "
            f"{policy.min_scales} are needed"
        )
    return best


def _fit(
    scales: ScaleLadder,
    counts: np.ndarray,
    window: Tuple[int, int],
    ambient_dim: int,
    target: Optional[DimensionTarget],
) -> DimensionEstimate:
    start, stop = window
    fit = linregress(-np.log(scales[start:stop]), np.log(counts[start:stop]))
    slope = float(np.clip(fit.slope, 0.0, ambient_dim))
    if slope != fit.slope:
        logger.debug("Clipped a box-counting slope of %.6g to %g", fit.slope, slope)
    stderr = float(fit.stderr) if np.isfinite(fit.stderr) else 0.0
    return DimensionEstimate(
        target=target,
        ambient_dim=ambient_dim,
        scales=scales,
        counts=[int(count) for count in counts],
        window=window,
        slope=slope,
        stderr=stderr,
        r2=min(float(fit.rvalue) ** 2, 1.0),
    )


def box_dimension(
    cloud: PointCloud,
    scale_ladder: Optional[Sequence[float]] = None,
    policy: Optional[WindowPolicy] = None,
) -> DimensionEstimate:
    """Estimate the box-counting dimension of `cloud`.

    It is the least-squares slope of ``log N_δ`` against ``log(1/δ)``, where ``N_δ`` is given by
    :obj:`box_count`, over the window of scales selected by the `policy`: the finest scales
    where ``N_δ`` saturates at the number of points and the coarsest where it is too small are
    left out.

    Parameters
    ----------
    cloud : PointCloud
        At least 100 points.
    scale_ladder : Optional[Sequence[float]]
        At least 5 strictly decreasing scales. By default, ``2⁻ᵏ`` times the extent of the cloud
        down to the extent divided by the number of points.
    policy : Optional[WindowPolicy]
        The rules of the window, by default the ones of :obj:`WindowPolicy`.

    Raises
    ------
    InsufficientDataError
        If there are not enough points or scales.
    NoValidWindowError
        If no window of scales qualifies.

    Examples
    --------
    >>> segment = PointCloud(dim=2, points=[[k / 1024, 0] for k in range(1025)])
    >>> round(box_dimension(segment).slope, 6)
    1.0

    """
    policy = policy or WindowPolicy()
    if cloud.size < MIN_POINTS:
        raise InsufficientDataError(
            f"the cloud has {cloud.size} points, at least {MIN_POINTS} are needed"
        )
    if scale_ladder is None:
        if cloud.extent == 0:
            raise InsufficientDataError("the cloud is a single point")
        scale_ladder = dyadic_scales(cloud.extent, cloud.extent / cloud.size)
    scales = check_scales(scale_ladder)
    counts = np.array([box_count(cloud, scale) for scale in scales])
    valid = (counts >= policy.min_count) & (counts <= policy.saturation * cloud.size)
    estimate = _fit(scales, counts, select_window(valid, policy), cloud.dim, cloud.target)
    logger.debug(
        "Box dimension of %d points in R^%d: %.4f (window %s)",
        cloud.size,
        cloud.dim,
        estimate.slope,
        estimate.window,
    )
    return estimate


def _check_scalar_size(path: SamplePath, mask: Optional[np.ndarray]) -> int:
    size = path.grid.size if mask is None else int(np.count_nonzero(mask))
    if size < MIN_POINTS:
        raise InsufficientDataError(
            f"the path has {size} points, at least {MIN_POINTS} are needed"
        )
    return size


def graph_box_dimension(
    path: SamplePath,
    scale_ladder: Optional[Sequence[float]] = None,
    policy: Optional[WindowPolicy] = None,
    mask: Optional[np.ndarray] = None,
) -> DimensionEstimate:
    """Estimate the box-counting dimension of the graph of `path`.

    Scalar fields are counted with :obj:`graph_box_count`, on the grid thinned so that each
    column spans ``policy.min_column_samples`` grid steps, keeping the scales a column of which
    spans that many steps of the full grid. Fields with several coordinates fall back to
    :obj:`box_dimension` of their :obj:`graph_cloud`.

    Parameters
    ----------
    path : SamplePath
        A path of at least 100 grid points.
    scale_ladder : Optional[Sequence[float]]
        At least 5 strictly decreasing scales. By default, ``2⁻ᵏ`` times the longest side of the
        domain of the grid, down to its largest step.
    policy : Optional[WindowPolicy]
        The rules of the window, by default the ones of :obj:`WindowPolicy`.
    mask : Optional[np.ndarray]
        The grid points to measure, all of them by default.

    Raises
    ------
    InsufficientDataError
        If there are not enough points or scales.
    NoValidWindowError
        If no window of scales qualifies.

    """
    policy = policy or WindowPolicy()
    if path.d != 1:
        return box_dimension(graph_cloud(path, mask), scale_ladder, policy)
    grid = path.grid
    size = _check_scalar_size(path, mask)
    step = float(np.max(grid.spacing))
    finest = policy.min_column_samples * step * (1 - _CELL_SLACK)
    if scale_ladder is None:
        scale_ladder = dyadic_scales(float(np.max(grid.domain.lengths)), step)
    scales = check_scales(scale_ladder)
    counts = np.array(
        [
            graph_box_count(path, scale, policy.min_column_samples, mask)
            if scale >= finest
            else 0
            for scale in scales
        ]
    )
    valid = (counts >= policy.min_count) & (np.array(scales) >= finest)
    estimate = _fit(
        scales,
        counts,
        select_window(valid, policy),
        grid.dimension + 1,
        DimensionTarget.GRAPH,
    )
    logger.debug(
        "Graph box dimension of a path of %d points: %.4f (window %s)",
        size,
        estimate.slope,
        estimate.window,
    )
    return estimate


def range_box_dimension(
    path: SamplePath,
    scale_ladder: Optional[Sequence[float]] = None,
    policy: Optional[WindowPolicy] = None,
    mask: Optional[np.ndarray] = None,
) -> DimensionEstimate:
    """Estimate the box-counting dimension of the range of `path`.

    Scalar fields are counted with :obj:`range_box_count`: the values are not points scattered
    on the line but cover intervals. Fields with several coordinates fall back to
    :obj:`box_dimension` of their :obj:`range_cloud`.

    Parameters
    ----------
    path : SamplePath
        A path of at least 100 grid points.
    scale_ladder : Optional[Sequence[float]]
        At least 5 strictly decreasing scales. By default, ``2⁻ᵏ`` times the extent of the
        values, down to the extent divided by the number of points.
    policy : Optional[WindowPolicy]
        The rules of the window, by default the ones of :obj:`WindowPolicy`.
    mask : Optional[np.ndarray]
        The grid points to measure, all of them by default.

    Raises
    ------
    InsufficientDataError
        If there are not enough points or scales, or if the path is constant.
    NoValidWindowError
        If no window of scales qualifies.

    """
    policy = policy or WindowPolicy()
    if path.d != 1:
        return box_dimension(range_cloud(path, mask), scale_ladder, policy)
    size = _check_scalar_size(path, mask)
    if scale_ladder is None:
        values = path.values[:, 0] if mask is None else path.values[mask, 0]
        extent = float(values.max() - values.min())
        if extent == 0:
            raise InsufficientDataError("the range is a single point")
        scale_ladder = dyadic_scales(extent, extent / size)
    scales = check_scales(scale_ladder)
    counts = np.array([range_box_count(path, scale, mask) for scale in scales])
    estimate = _fit(
        scales,
        counts,
        select_window(counts >= policy.min_count, policy),
        1,
        DimensionTarget.RANGE,
    )
    logger.debug(
        "Range box dimension of a path of %d points: %.4f (window %s)",
        size,
        estimate.slope,
        estimate.window,
    )
    return estimate


def localized_dimension(
    path: SamplePath,
    t0: Point,
    rho_ladder: Sequence[float],
    target: Union[DimensionTarget, str] = DimensionTarget.GRAPH,
    scale_ladder: Optional[Sequence[float]] = None,
    counting: Optional[Union[Counting, str]] = None,
    policy: Optional[WindowPolicy] = None,
) -> List[Tuple[float, DimensionEstimate]]:
    """Estimate the dimension of the graph or the range of `path` restricted to balls around `t0`.

    The sequence of estimates along the decreasing radii is the numerical counterpart of the
    limit ``ρ → 0`` of ``dim Gr_X(B(t₀, ρ))`` or ``dim Rg_X(B(t₀, ρ))``; the estimate at the
    smallest radius is the measured value. The balls are Euclidean: on grids of several
    dimensions, only the grid points at distance at most ``ρ`` from `t0` are measured.

    Parameters
    ----------
    path : SamplePath
        The path.
    t0 : Point
        The center of the balls, in the domain of the grid of the path.
    rho_ladder : Sequence[float]
        The strictly decreasing radii of the balls, each ball holding 256 grid points or more.
    target : Union[DimensionTarget, str]
        The set to measure.
    scale_ladder : Optional[Sequence[float]]
        The scales, as fractions of the diameter ``2ρ`` of each ball. By default,
        :obj:`DEFAULT_SCALE_FRACTIONS`.
    counting : Optional[Union[Counting, str]]
        How the boxes are counted. By default, graphs of scalar fields are counted by columns,
        ranges of scalar fields by intervals, and the rest by cells.
    policy : Optional[WindowPolicy]
        The rules of the window, by default the ones of :obj:`WindowPolicy`.

    Returns
    -------
    List[Tuple[float, DimensionEstimate]]
        The radii and their estimates, in the order of `rho_ladder`.

    Raises
    ------
    InsufficientDataError
        If a ball holds fewer than 256 grid points.
    OutOfDomainError
        If `t0` is outside the domain of the grid.
    ValueError
        If the counting does not apply to the target or to the field.

    """
    target = DimensionTarget(target)
    if counting is None:
        if path.d != 1:
            counting = Counting.CELLS
        elif target is DimensionTarget.GRAPH:
            counting = Counting.COLUMNS
        else:
            counting = Counting.INTERVALS
    counting = Counting(counting)
    if target is DimensionTarget.RANGE and counting is Counting.COLUMNS:
        raise ValueError("a range cannot be counted by columns")
    if target is DimensionTarget.GRAPH and counting is Counting.INTERVALS:
        raise ValueError("a graph cannot be counted by intervals")
    if counting is not Counting.CELLS and path.d != 1:
        raise ValueError(f"{counting.value} counting needs a field with one coordinate")
    if t0.dimension != path.grid.dimension:
        raise DimensionMismatchError(f"t0 must have dimension {path.grid.dimension}")
    if not path.grid.domain.contains(t0):
        raise OutOfDomainError(f"{t0.coords} is outside the domain of the path")
    fractions = check_scales(
        DEFAULT_SCALE_FRACTIONS if scale_ladder is None else scale_ladder
    )
    balls = []
    for rho in check_ladder(rho_ladder):
        ball = BallSpec(center=t0, radius=rho)
        restricted = restrict_ball(path, ball)
        mask = ball_mask(restricted.grid, ball)
        size = int(np.count_nonzero(mask))
        if size < MIN_BALL_POINTS:
            raise InsufficientDataError(
                f"the ball of radius {rho:g} holds {size} grid points, "
                f"at least {MIN_BALL_POINTS} are needed"
            )
        balls.append((rho, restricted, None if mask.all() else mask))
    results = []
    for rho, restricted, mask in balls:
        scales = tuple(fraction * 2 * rho for fraction in fractions)
        if counting is Counting.COLUMNS:
            estimate = graph_box_dimension(restricted, scales, policy, mask)
        elif counting is Counting.INTERVALS:
            estimate = range_box_dimension(restricted, scales, policy, mask)
        elif target is DimensionTarget.RANGE:
            estimate = box_dimension(range_cloud(restricted, mask), scales, policy)
        else:
            estimate = box_dimension(graph_cloud(restricted, mask), scales, policy)
        logger.info(
            "Localized %s dimension at %s, radius %g: %.4f",
            target.value,
            t0.coords,
            rho,
            estimate.slope,
        )
        results.append((rho, estimate))
    return results
