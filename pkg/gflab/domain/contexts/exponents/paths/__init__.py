"""Local Hölder exponent of a sample path, from the decay of its oscillation around a point."""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.utils.errors import (
    DegeneratePathError,
    DimensionMismatchError,
    InsufficientDataError,
    OutOfDomainError,
)

from ..estimation import check_ladder


logger = logging.getLogger(__name__)

#: Least number of radii in the regression.
MIN_RADII = 4

#: Least number of grid points in a ball for its radius to be used.
MIN_POINTS_PER_RADIUS = 8

#: The default ladder stops when a radius gets below this number of grid spacings.
MIN_SPACINGS = 8


def default_path_ladder(grid: GridSpec) -> Tuple[float, ...]:
    """Return the radii ``2⁻ᵏ·L``, ``k ≥ 2``, down to ``8`` grid spacings.

    ``L`` is the smallest side of the domain of the grid.

    Examples
    --------
    >>> default_path_ladder(GridSpec.of([0], [1], 1025))
    (0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125)

    """
    length = float(np.min(grid.domain.lengths))
    finest = MIN_SPACINGS * float(np.max(grid.spacing))
    ladder: List[float] = []
    exponent = 2
    while 2.0 ** -exponent * length >= finest:
        ladder.append(2.0 ** -exponent * length)
        exponent += 1
    return tuple(ladder)


def oscillations(
    path: SamplePath, t0: Point, rho_ladder: Sequence[float]
) -> Tuple[np.ndarray, np.ndarray]:
    """Return the oscillation of `path` in ``B(t₀, ρ)`` and the number of grid points there.

    The oscillation is the largest ``max - min`` of the coordinates of the path over the grid
    points of the ball.
    """
    points = path.points
    distances = np.sqrt(np.sum((points - t0.as_array()) ** 2, axis=-1))
    swings = np.zeros(len(rho_ladder))
    counts = np.zeros(len(rho_ladder), dtype=int)
    for index, rho in enumerate(rho_ladder):
        inside = distances <= rho
        counts[index] = int(inside.sum())
        if counts[index]:
            values = path.values[inside]
            swings[index] = float(np.max(values.max(axis=0) - values.min(axis=0)))
    return swings, counts


def path_local_exponent(
    path: SamplePath, t0: Point, rho_ladder: Optional[Sequence[float]] = None
) -> float:
    """Estimate the local Hölder exponent of `path` at `t0`.

    It is the slope of the least-squares regression of ``log osc(ρ)`` against ``log ρ``, where
    ``osc(ρ)`` is given by :obj:`oscillations`. Radii with fewer than 8 grid points in their ball
    are left out, as are radii where the path does not move.

    Parameters
    ----------
    path : SamplePath
        The path.
    t0 : Point
        A point of the domain of the grid of the path.
    rho_ladder : Optional[Sequence[float]]
        Strictly decreasing radii, by default given by :obj:`default_path_ladder`.

    Raises
    ------
    DegeneratePathError
        If the path does not move in any ball.
    InsufficientDataError
        If fewer than 4 radii have 8 grid points in their ball, or fewer than 2 radii remain
        once the radii without oscillation are left out.
    OutOfDomainError
        If `t0` is outside the domain of the grid.

    Examples
    --------
    >>> grid = GridSpec.of([0], [1], 1025)
    >>> line = SamplePath(grid=grid, values=grid.axes()[0], d=1, seed=0, generator={})
    >>> round(path_local_exponent(line, Point.of(0.5)), 9)
    1.0

    """
    if t0.dimension != path.grid.dimension:
        raise DimensionMismatchError(f"t0 must have dimension {path.grid.dimension}")
    if not path.grid.domain.contains(t0):
        raise OutOfDomainError(f"{t0.coords} is outside the domain of the path")
    if rho_ladder is None:
        rho_ladder = default_path_ladder(path.grid)
    ladder = np.array(check_ladder(rho_ladder))
    swings, counts = oscillations(path, t0, ladder)
    usable = counts >= MIN_POINTS_PER_RADIUS
    if usable.sum() < MIN_RADII:
        raise InsufficientDataError(
            f"only {int(usable.sum())} radii have {MIN_POINTS_PER_RADIUS} grid points in "
            f"their ball, {MIN_RADII} are needed"
        )
    moving = usable & (swings > 0)
    if not moving.any():
        raise DegeneratePathError(f"the path does not move around {t0.coords}")
    if moving.sum() < 2:
        raise InsufficientDataError("the path only moves in one ball")
    fit = linregress(np.log(ladder[moving]), np.log(swings[moving]))
    logger.debug(
        "Oscillation slope at %s over %d radii: %.6g (r=%.4g)",
        t0.coords,
        int(moving.sum()),
        fit.slope,
        fit.rvalue,
    )
    return float(fit.slope)
