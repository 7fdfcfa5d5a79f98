"""Exact sampling of Gaussian fields from their covariance.

Two exact methods are provided:

- the factorization of the covariance matrix of the grid points, for any kernel with a
  covariance, limited to :obj:`EXACT_FACTORIZATION_BUDGET` points
- the sequential Durbin-Levinson recursion for the fractional Brownian motion on a regular
  1-dimensional grid starting at 0, without this limit

Coordinate ``c`` of a sample uses the stream ``substream(seed, 0, c)``, and replica ``r`` of
:obj:`sample_gaussian_replicas` uses ``substream(seed, r, 0)``: the first replica is the first
coordinate of the sample drawn with the same seed.

"""
import logging
from typing import Any, Dict, Tuple

import numpy as np
from scipy import linalg

from gflab.domain.contexts.kernels.entities import IncrementKernel
from gflab.domain.contexts.kernels.families import fbm_kernel
from gflab.domain.utils.entity import validate_positive_integer
from gflab.domain.utils.errors import BudgetExceededError, NotPositiveDefiniteError
from gflab.domain.utils.random import substream

from ..entities import GridSpec, SamplePath


logger = logging.getLogger(__name__)

#: Maximum number of grid points for a covariance factorization.
EXACT_FACTORIZATION_BUDGET = 8192

#: First diagonal jitter, relative to the largest variance.
JITTER_START = 1e-12

#: Last diagonal jitter tried before giving up, relative to the largest variance.
JITTER_MAX = 1e-6


def factorize_covariance(
    kernel: IncrementKernel, points: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Return a lower triangular factor of the covariance of `kernel` at the rows of `points`.

    Points with a null variance (like the origin of the fractional Brownian motion) are left out
    of the factorization: their values are always 0.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        The boolean mask of the points with a positive variance, and the factor ``L`` with
        ``L·Lᵀ`` equal to their covariance matrix, up to the jitter.

    Raises
    ------
    NotPositiveDefiniteError
        If the matrix cannot be factorized, even with a diagonal jitter of ``1e-6`` times the
        largest variance.

    """
    matrix = kernel.covariance_matrix(points)
    variances = np.diag(matrix)
    active = variances > 0
    matrix = matrix[np.ix_(active, active)]
    scale = float(variances.max()) if active.any() else 1.0
    try:
        return active, linalg.cholesky(matrix, lower=True)
    except linalg.LinAlgError:
        pass
    jitter = JITTER_START
    while jitter <= JITTER_MAX * (1 + 1e-9):
        logger.warning(
            "Covariance of %s is not numerically positive definite, adding a jitter of %g",
            kernel.label,
            jitter * scale,
        )
        try:
            factor = linalg.cholesky(
                matrix + jitter * scale * np.eye(len(matrix)), lower=True
            )
        except linalg.LinAlgError:
            jitter *= 10
            continue
        return active, factor
    raise NotPositiveDefiniteError(
        f"the covariance of {len(matrix)} points cannot be factorized", context=kernel.label
    )


def _check_exact(kernel: IncrementKernel, grid: GridSpec) -> None:
    if not kernel.has_covariance:
        raise TypeError(f"{kernel.label} does not provide a covariance")
    if grid.size > EXACT_FACTORIZATION_BUDGET:
        raise BudgetExceededError(
            f"{grid.size} points are above the factorization budget of "
            f"{EXACT_FACTORIZATION_BUDGET}",
            context=kernel.label,
        )


def _provenance(kernel: IncrementKernel, method: str) -> Dict[str, Any]:
    return {"family": kernel.family.value, "params": dict(kernel.params), "method": method}


def sample_gaussian_exact(
    kernel: IncrementKernel, grid: GridSpec, d: int = 1, seed: int = 0
) -> SamplePath:
    """Draw a mean-zero Gaussian field with the covariance of `kernel` on the points of `grid`.

    Parameters
    ----------
    kernel : IncrementKernel
        A kernel providing a covariance.
    grid : GridSpec
        The grid, of at most :obj:`EXACT_FACTORIZATION_BUDGET` points.
    d : int
        The number of independent coordinates.
    seed : int
        The seed of the draw.

    Raises
    ------
    TypeError
        If the kernel does not provide a covariance.
    BudgetExceededError
        If the grid is too large for a factorization.
    NotPositiveDefiniteError
        If the covariance cannot be factorized.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.families import fbm_kernel
    >>> grid = GridSpec.of([0], [1], 33)
    >>> path = sample_gaussian_exact(fbm_kernel(0.5), grid, d=2, seed=4)
    >>> path.values.shape, path.values[0].tolist()
    ((33, 2), [0.0, 0.0])
    >>> again = sample_gaussian_exact(fbm_kernel(0.5), grid, d=2, seed=4)
    >>> bool(np.array_equal(path.values, again.values))
    True

    """
    validate_positive_integer(d, False, "d")
    _check_exact(kernel, grid)
    active, factor = factorize_covariance(kernel, grid.points())
    values = np.zeros((grid.size, d))
    for coordinate in range(d):
        noise = substream(seed, 0, coordinate).standard_normal(len(factor))
        values[active, coordinate] = factor @ noise
    logger.debug("Drew %d coordinate(s) of %s on %d points", d, kernel.label, grid.size)
    return SamplePath(
        grid=grid,
        values=values,
        d=d,
        seed=seed,
        generator=_provenance(kernel, "cholesky"),
    )


def sample_gaussian_replicas(
    kernel: IncrementKernel, grid: GridSpec, replicas: int, seed: int = 0
) -> np.ndarray:
    """Draw `replicas` independent scalar realizations sharing one factorization.

    Returns
    -------
    np.ndarray
        The ``(replicas, grid.size)`` array of values, replica ``r`` drawn from the stream
        ``substream(seed, r, 0)``.

    """
    validate_positive_integer(replicas, False, "replicas")
    _check_exact(kernel, grid)
    active, factor = factorize_covariance(kernel, grid.points())
    noise = np.stack(
        [substream(seed, replica, 0).standard_normal(len(factor)) for replica in range(replicas)]
    )
    values = np.zeros((replicas, grid.size))
    values[:, active] = noise @ factor.T
    return values


def fgn_autocovariance(hurst: float, count: int) -> np.ndarray:
    """Return the autocovariance ``γ(0..count-1)`` of the unit-step fractional Gaussian noise.

    Examples
    --------
    >>> fgn_autocovariance(0.5, 3).tolist()
    [1.0, 0.0, 0.0]

    """
    lags = np.arange(count, dtype=float)
    power = 2 * hurst
    return 0.5 * (
        np.abs(lags + 1) ** power - 2 * lags ** power + np.abs(lags - 1) ** power
    )


def _durbin_levinson(autocovariance: np.ndarray, noise: np.ndarray) -> np.ndarray:
    # Each step predicts the next increment from all the previous ones.
    count = len(autocovariance)
    increments = np.empty_like(noise)
    phi = np.zeros(count)
    variance = autocovariance[0]
    increments[0] = np.sqrt(variance) * noise[0]
    for step in range(1, count):
        previous = phi[: step - 1].copy()
        reflection = (
            autocovariance[step] - previous @ autocovariance[step - 1 : 0 : -1]
        ) / variance
        phi[: step - 1] = previous - reflection * previous[::-1]
        phi[step - 1] = reflection
        variance *= 1 - reflection ** 2
        mean = phi[:step] @ increments[step - 1 :: -1]
        increments[step] = mean + np.sqrt(variance) * noise[step]
    return increments


def sample_fbm_hosking(hurst: float, grid: GridSpec, d: int = 1, seed: int = 0) -> SamplePath:
    """Draw a fractional Brownian motion on a regular grid ``[0, T]`` with the Durbin-Levinson method.

    The increments are drawn one after the other from their exact conditional law, so the
    result has the exact law of the fractional Brownian motion, in ``O(n²)`` operations.

    Raises
    ------
    ValueError
        If the grid is not 1-dimensional or does not start at 0, or if `hurst` is not in
        ``(0, 1]``.

    Examples
    --------
    >>> path = sample_fbm_hosking(0.7, GridSpec.of([0], [1], 9), seed=1)
    >>> path.values.shape, float(path.values[0, 0]), path.generator["method"]
    ((9, 1), 0.0, 'hosking')

    """
    kernel = fbm_kernel(hurst)
    validate_positive_integer(d, False, "d")
    if grid.dimension != 1 or grid.domain.lower.coords[0] != 0:
        raise ValueError("the sequential fbm sampler needs a 1-dimensional grid starting at 0")
    steps = grid.size - 1
    step = float(grid.spacing[0])
    autocovariance = fgn_autocovariance(hurst, steps) * step ** (2 * hurst)
    noise = np.stack(
        [substream(seed, 0, coordinate).standard_normal(steps) for coordinate in range(d)],
        axis=1,
    )
    increments = _durbin_levinson(autocovariance, noise)
    values = np.zeros((grid.size, d))
    values[1:] = np.cumsum(increments, axis=0)
    logger.debug("Drew %d fbm coordinate(s) on %d points", d, grid.size)
    return SamplePath(
        grid=grid,
        values=values,
        d=d,
        seed=seed,
        generator=_provenance(kernel, "hosking"),
    )
