"""Series samplers: the generalized Weierstrass function and the spectral multifractional Brownian motion."""
import logging
import math
from typing import Optional, Union

import numpy as np

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.entities import HurstProfile
from gflab.domain.contexts.kernels.families import (
    DEFAULT_FREQ_BINS,
    default_freq_cutoff,
    gw_default_truncation,
    gw_kernel,
    mbm_spectral_sigma2_array,
    spectral_components,
    spectral_frequencies,
)
from gflab.domain.contexts.kernels.profiles import profile_values
from gflab.domain.utils.entity import validate_positive_integer
from gflab.domain.utils.errors import DimensionMismatchError
from gflab.domain.utils.random import substream

from ..entities import GridSpec, SamplePath


logger = logging.getLogger(__name__)

#: Number of grid points evaluated at once by the series samplers.
POINTS_CHUNK = 1024


def _scalar_grid(grid: GridSpec) -> np.ndarray:
    if grid.dimension != 1:
        raise DimensionMismatchError("series samplers need a 1-dimensional grid")
    return grid.axes()[0]


def _domain_length(profile: HurstProfile) -> float:
    return profile.domain.upper.coords[0] - profile.domain.lower.coords[0]


def sample_gw(
    profile: HurstProfile,
    grid: GridSpec,
    lam: float = 2.0,
    truncation: Optional[int] = None,
    d: int = 1,
    seed: int = 0,
) -> SamplePath:
    """Draw the generalized Weierstrass function ``X_t = Σ_{j≤J} Z_j λ^{-jH(t)} sin(λʲt + θ_j)``.

    ``Z_j`` are standard normal and ``θ_j`` uniform on ``[0, 2π)``, drawn once per coordinate and
    shared by all the points of the grid.

    Parameters
    ----------
    profile : HurstProfile
        The Hurst profile, defined on the whole grid.
    grid : GridSpec
        A 1-dimensional grid.
    lam : float
        The frequency ratio ``λ ≥ 2``.
    truncation : Optional[int]
        The number ``J`` of terms, by default the one of :obj:`gw_default_truncation`.
    d : int
        The number of independent coordinates.
    seed : int
        The seed of the draw.

    Raises
    ------
    ValueError
        If ``λ < 2`` or ``J < 1``.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> path = sample_gw(constant_profile(0.5), GridSpec.of([0], [1], 17), seed=2)
    >>> path.values.shape, path.generator["method"]
    ((17, 1), 'series')

    """
    if truncation is None:
        truncation = gw_default_truncation(profile, lam)
    kernel = gw_kernel(profile, lam, truncation)
    validate_positive_integer(d, False, "d")
    times = _scalar_grid(grid)
    hurst = profile_values(profile, times)
    orders = np.arange(1, truncation + 1)
    frequencies = lam ** orders.astype(float)
    amplitudes = np.empty((d, truncation))
    phases = np.empty((d, truncation))
    for coordinate in range(d):
        generator = substream(seed, 0, coordinate)
        amplitudes[coordinate] = generator.standard_normal(truncation)
        phases[coordinate] = generator.uniform(0, 2 * math.pi, truncation)
    values = np.empty((grid.size, d))
    for start in range(0, grid.size, POINTS_CHUNK):
        chunk = slice(start, start + POINTS_CHUNK)
        decay = np.exp(-np.outer(hurst[chunk], orders) * math.log(lam))
        angles = np.outer(times[chunk], frequencies)
        for coordinate in range(d):
            values[chunk, coordinate] = np.sum(
                amplitudes[coordinate]
                * decay
                * np.sin(angles + phases[coordinate]),
                axis=1,
            )
    logger.debug("Drew %d Weierstrass coordinate(s) with %d terms", d, truncation)
    return SamplePath(
        grid=grid,
        values=values,
        d=d,
        seed=seed,
        generator={
            "family": kernel.family.value,
            "params": dict(kernel.params),
            "method": "series",
        },
    )


def weierstrass_function(
    t: np.ndarray, hurst: float, lam: float = 2.0, truncation: int = 30
) -> np.ndarray:
    """Evaluate the deterministic Weierstrass-type function ``Σ_{j≤J} λ^{-jH} sin(λʲt)``.

    It has unit amplitudes and null phases. Its graph has a box dimension of ``2 - H``, which is
    used to calibrate the dimension estimators.

    Examples
    --------
    >>> weierstrass_function(np.array([0.0]), 0.5).tolist()
    [0.0]

    """
    t = np.asarray(t, dtype=float)
    orders = np.arange(1, truncation + 1)
    weights = lam ** (-hurst * orders.astype(float))
    return np.sin(np.outer(t, lam ** orders.astype(float))) @ weights


def sample_mbm_spectral(
    profile: HurstProfile,
    grid: GridSpec,
    d: int = 1,
    seed: int = 0,
    freq_cutoff: Optional[float] = None,
    freq_bins: int = DEFAULT_FREQ_BINS,
) -> SamplePath:
    """Draw the spectral discretization of the harmonizable multifractional Brownian motion.

    ``X_t = Σ_k [(cos(tξ_k) - 1)·g_k + sin(tξ_k)·g'_k]·ξ_k^{-H(t)-½}·√Δξ_k``, over log-spaced
    frequency bins from ``2π/(10·length)`` to `freq_cutoff`. The normalization is left unit.

    Parameters
    ----------
    profile : HurstProfile
        The Hurst profile, defined on the whole grid.
    grid : GridSpec
        A 1-dimensional grid.
    d : int
        The number of independent coordinates.
    seed : int
        The seed of the draw.
    freq_cutoff : Optional[float]
        The highest frequency, by default ``2π`` over the grid step.
    freq_bins : int
        The number of frequency bins, at least 16.

    Raises
    ------
    ValueError
        If `freq_bins` is below 16.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import affine_profile
    >>> path = sample_mbm_spectral(affine_profile(0.3, 0.4), GridSpec.of([0], [1], 9), freq_bins=64)
    >>> float(path.values[0, 0])
    0.0

    """
    validate_positive_integer(d, False, "d")
    times = _scalar_grid(grid)
    profile_values(profile, times)
    if freq_cutoff is None:
        freq_cutoff = default_freq_cutoff(grid.resolution[0], float(grid.domain.lengths[0]))
    centers, widths = spectral_frequencies(_domain_length(profile), freq_cutoff, freq_bins)
    cos_noise = np.empty((freq_bins, d))
    sin_noise = np.empty((freq_bins, d))
    for coordinate in range(d):
        generator = substream(seed, 0, coordinate)
        cos_noise[:, coordinate] = generator.standard_normal(freq_bins)
        sin_noise[:, coordinate] = generator.standard_normal(freq_bins)
    values = np.empty((grid.size, d))
    for start in range(0, grid.size, POINTS_CHUNK):
        chunk = slice(start, start + POINTS_CHUNK)
        cos_part, sin_part = spectral_components(times[chunk], profile, centers, widths)
        values[chunk] = cos_part @ cos_noise + sin_part @ sin_noise
    logger.debug("Drew %d spectral mbm coordinate(s) with %d bins", d, freq_bins)
    return SamplePath(
        grid=grid,
        values=values,
        d=d,
        seed=seed,
        generator={
            "family": "mbm_spectral",
            "params": {"freq_cutoff": float(freq_cutoff), "freq_bins": freq_bins},
            "method": "spectral",
        },
    )


def spectral_sigma2(
    profile: HurstProfile,
    s: Union[Point, float],
    t: Union[Point, float],
    freq_cutoff: float,
    freq_bins: int = DEFAULT_FREQ_BINS,
) -> float:
    """Return the exact incremental variance of :obj:`sample_mbm_spectral` between `s` and `t`.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> spectral_sigma2(constant_profile(0.5), 0.25, 0.25, 2 * np.pi * 64, 64)
    0.0

    """
    centers, widths = spectral_frequencies(_domain_length(profile), freq_cutoff, freq_bins)
    pair = [
        np.array([[value.coords[0] if isinstance(value, Point) else float(value)]])
        for value in (s, t)
    ]
    return float(mbm_spectral_sigma2_array(pair[0], pair[1], profile, centers, widths)[0])
