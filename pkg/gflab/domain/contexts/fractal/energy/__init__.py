"""Riesz energies of the uniform measure on a cloud, and the Frostman criterion on their stability."""
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import cdist

from gflab.domain.utils.entity import validate_positive_integer, validate_positive_real
from gflab.domain.utils.errors import InsufficientDataError

from ..entities import EnergyReport, PointCloud, RieszEnergy


logger = logging.getLogger(__name__)

#: Points closer than this distance are duplicates.
DUPLICATE_TOLERANCE = 1e-12

#: An energy growing by less than this fraction when the cloud is refined is stable.
DEFAULT_GROWTH_THRESHOLD = 0.10

#: Default exponents probed by :obj:`frostman_probe`.
DEFAULT_BETAS = tuple(round(0.1 * k, 1) for k in range(1, 21))

#: Default number of refinements of :obj:`frostman_probe`.
DEFAULT_REFINEMENT_LEVELS = 3

#: Rows of the distance matrix evaluated at once.
DISTANCE_BLOCK_ROWS = 512


def deduplicate(
    points: np.ndarray, tolerance: float = DUPLICATE_TOLERANCE
) -> Tuple[np.ndarray, int]:
    """Leave out the points closer than `tolerance` to a previous point.

    Returns
    -------
    Tuple[np.ndarray, int]
        The points kept, and the number of points left out.

    Examples
    --------
    >>> kept, count = deduplicate(np.array([[0.0], [1e-14], [1.0]]))
    >>> kept.tolist(), count
    ([[0.0], [1.0]], 1)

    """
    pairs = cKDTree(points).query_pairs(r=tolerance, output_type="ndarray")
    if not len(pairs):
        return points, 0
    duplicates = np.unique(pairs[:, 1])
    keep = np.ones(len(points), dtype=bool)
    keep[duplicates] = False
    return points[keep], int(duplicates.size)


def _pair_sums(points: np.ndarray, betas: Sequence[float]) -> Tuple[np.ndarray, float]:
    """Return ``Σ_{i<j} |x_i - x_j|^{-β}`` for each ``β``, and the diameter of the points."""
    sums = np.zeros(len(betas))
    diameter = 0.0
    for start in range(0, len(points) - 1, DISTANCE_BLOCK_ROWS):
        block = points[start : start + DISTANCE_BLOCK_ROWS]
        distances = cdist(block, points[start:])
        above = np.arange(distances.shape[1])[None, :] > np.arange(len(block))[:, None]
        distances = distances[above]
        if not distances.size:
            continue
        diameter = max(diameter, float(distances.max()))
        logs = np.log(distances)
        for index, beta in enumerate(betas):
            sums[index] += float(np.exp(-beta * logs).sum())
    return sums, diameter


def measure_riesz_energy(
    cloud: PointCloud, beta: float, tolerance: float = DUPLICATE_TOLERANCE
) -> RieszEnergy:
    """Return the ``β``-energy of the uniform measure on the points of `cloud`, with its counts.

    It is ``(1/M²)·Σ_{i≠j} |x_i - x_j|^{-β}``, the diagonal left out. Near-duplicate points are
    left out first and counted, and ``M`` is the number of points kept.

    Raises
    ------
    InsufficientDataError
        If the cloud has a single point.

    Examples
    --------
    >>> energy = measure_riesz_energy(PointCloud(dim=1, points=[0.0, 0.0, 1.0]), 2.0)
    >>> energy.energy, energy.size, energy.duplicates
    (0.5, 2, 1)

    """
    validate_positive_real(beta, False, "beta")
    if cloud.size < 2:
        raise InsufficientDataError("a Riesz energy needs at least 2 points")
    points, duplicates = deduplicate(cloud.points, tolerance)
    if duplicates:
        logger.warning("Left %d near-duplicate point(s) out of the energy", duplicates)
    if len(points) < 2:
        energy = math.inf
    else:
        sums, _ = _pair_sums(points, [beta])
        energy = float(2 * sums[0] / len(points) ** 2)
    return RieszEnergy(beta=beta, energy=energy, size=len(points), duplicates=duplicates)


def riesz_energy(
    cloud: PointCloud, beta: float, tolerance: float = DUPLICATE_TOLERANCE
) -> float:
    """Return the ``β``-energy of the uniform measure on the points of `cloud`.

    The value of :obj:`measure_riesz_energy`, which also tells how many points were left out.

    Examples
    --------
    >>> riesz_energy(PointCloud(dim=1, points=[0.0, 1.0]), 2.0)
    0.5

    """
    return measure_riesz_energy(cloud, beta, tolerance).energy


def _check_betas(beta_grid: Sequence[float]) -> Tuple[float, ...]:
    betas = tuple(float(beta) for beta in beta_grid)
    if not betas:
        raise ValueError("beta_grid must not be empty")
    for beta in betas:
        validate_positive_real(beta, False, "beta_grid")
    if any(later <= earlier for earlier, later in zip(betas, betas[1:])):
        raise ValueError("beta_grid must be strictly increasing")
    return betas


def frostman_probe(
    cloud: PointCloud,
    beta_grid: Optional[Sequence[float]] = None,
    refinement_levels: int = DEFAULT_REFINEMENT_LEVELS,
    threshold: float = DEFAULT_GROWTH_THRESHOLD,
    tolerance: float = DUPLICATE_TOLERANCE,
) -> EnergyReport:
    """Probe the finiteness of the Riesz energies of the set sampled by `cloud`.

    The cloud is taken at `refinement_levels` dyadic sub-samplings, one point out of ``2ᵏ`` for
    the coarser ones, in the order of its points. At each refinement, near-duplicate points are
    left out and the energies are computed for each ``β`` after scaling the cloud to a unit
    diameter. An energy that grows by less than `threshold` at every doubling of the points is
    taken as finite: the largest ``β`` stable with all the smaller ones is evidence that the
    set has a dimension of at least ``β``. It is evidence only, never a proof.

    Parameters
    ----------
    cloud : PointCloud
        The finest sampling of the set, points ordered so that sub-samplings are coarser
        samplings (a graph or a range taken on a grid).
    beta_grid : Optional[Sequence[float]]
        The strictly increasing exponents to evaluate, by default :obj:`DEFAULT_BETAS`.
    refinement_levels : int
        The number of refinements, at least 2.
    threshold : float
        The relative growth under which an energy is stable, ``0.10`` by default.
    tolerance : float
        The distance under which two points are duplicates.

    Raises
    ------
    InsufficientDataError
        If there are fewer than 2 refinements, or if the coarsest one has a single point.

    Examples
    --------
    >>> segment = PointCloud(dim=1, points=np.linspace(0, 1, 2048))
    >>> frostman_probe(segment, [0.5, 1.5], refinement_levels=2).stable_max_beta
    0.5

    """
    validate_positive_integer(refinement_levels, False, "refinement_levels")
    if refinement_levels < 2:
        raise InsufficientDataError("the Frostman criterion needs at least 2 refinements")
    validate_positive_real(threshold, False, "threshold")
    betas = _check_betas(DEFAULT_BETAS if beta_grid is None else beta_grid)
    coarsest_size = len(cloud.points[:: 2 ** (refinement_levels - 1)])
    if coarsest_size < 2:
        raise InsufficientDataError(
            f"a cloud of {cloud.size} points cannot be refined {refinement_levels} times"
        )

    sizes = []
    raw_energies = []
    duplicates = 0
    diameter = 0.0
    for level in range(refinement_levels):
        points, duplicates = deduplicate(
            cloud.points[:: 2 ** (refinement_levels - 1 - level)], tolerance
        )
        sizes.append(len(points))
        if len(points) < 2:
            raw_energies.append(np.full(len(betas), np.inf))
            continue
        sums, level_diameter = _pair_sums(points, betas)
        diameter = max(diameter, level_diameter)
        raw_energies.append(2 * sums / len(points) ** 2)
    if duplicates:
        logger.warning("Left %d near-duplicate point(s) out of the finest cloud", duplicates)

    scale = np.power(diameter, np.array(betas)) if diameter > 0 else np.ones(len(betas))
    energies = np.array(raw_energies) * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = energies[1:] / energies[:-1]
    ratios[~np.isfinite(energies[:-1])] = np.inf
    growth = ratios.max(axis=0)

    stable_max_beta = None
    for beta, ratio in zip(betas, growth):
        if not ratio < 1 + threshold:
            break
        stable_max_beta = beta
    logger.info(
        "Frostman criterion on %d points over %d refinements: stable up to beta=%s",
        cloud.size,
        refinement_levels,
        stable_max_beta,
    )
    return EnergyReport(
        betas=betas,
        level_sizes=sizes,
        level_energies=energies,
        growth=growth,
        threshold=threshold,
        duplicates=duplicates,
        stable_max_beta=stable_max_beta,
    )
