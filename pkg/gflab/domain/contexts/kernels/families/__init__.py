"""Incremental variance kernels and covariances of the supported Gaussian fields.

Each family comes with scalar functions working on :obj:`Point` (``fbm_sigma2``...), vectorized
functions working on ``(n, N)`` arrays of points (``fbm_sigma2_array``...) and a builder returning
an :obj:`IncrementKernel` (``fbm_kernel``...). :obj:`build_kernel` builds any kernel from its
family and parameters, as stored in JSON documents.

"""
import logging
import math
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from gflab.domain.contexts.geometry.entities import BallSpec, Point
from gflab.domain.contexts.geometry.measures import corner_volume_array, sym_diff_array
from gflab.domain.contexts.geometry.sampling import sample_ball_pair_arrays
from gflab.domain.utils.entity import validate_positive_real, validate_real_in_range
from gflab.domain.utils.errors import ConfigError, DimensionMismatchError

from ..entities import HurstProfile, IncrementKernel, KernelFamily


logger = logging.getLogger(__name__)

#: Default truncation tolerance of the Weierstrass series.
GW_TAIL_TOLERANCE = 1e-12

#: Number of pairs evaluated at once by the series-based kernels.
PAIRS_CHUNK = 4096

#: Default number of frequency bins of the spectral discretization of the mBm.
DEFAULT_FREQ_BINS = 2048

#: Minimum number of frequency bins of the spectral discretization of the mBm.
MIN_FREQ_BINS = 16


def _points(point: Point) -> np.ndarray:
    return point.as_array()[None, :]


def _norms(points: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(points * points, axis=-1))


def _validate_fbm_hurst(hurst: float) -> None:
    validate_real_in_range(hurst, False, "fbm H", 0, 1, high_inclusive=True)


def _validate_mpfbm_hurst(hurst: float) -> None:
    validate_real_in_range(hurst, False, "mpfbm H", 0, 0.5, high_inclusive=True)


def _scalar_pair(s: Point, t: Point) -> Tuple[float, float]:
    if s.dimension != 1 or t.dimension != 1:
        raise DimensionMismatchError("this kernel is only defined for scalar points")
    return s.coords[0], t.coords[0]


# fractional Brownian motion


def fbm_sigma2_array(s: np.ndarray, t: np.ndarray, hurst: float) -> np.ndarray:
    """Return ``‖t - s‖^{2H}`` for each pair of rows of `s` and `t`."""
    return _norms(np.asarray(t) - np.asarray(s)) ** (2 * hurst)


def fbm_covariance_array(s: np.ndarray, t: np.ndarray, hurst: float) -> np.ndarray:
    """Return ``½(‖s‖^{2H} + ‖t‖^{2H} - ‖t - s‖^{2H})`` for each pair of rows of `s` and `t`."""
    return 0.5 * (
        _norms(s) ** (2 * hurst)
        + _norms(t) ** (2 * hurst)
        - fbm_sigma2_array(s, t, hurst)
    )


def fbm_sigma2(s: Point, t: Point, hurst: float) -> float:
    """Return the incremental variance ``|t - s|^{2H}`` of the fractional Brownian motion.

    Raises
    ------
    ValueError
        If `hurst` is not in ``(0, 1]``.

    Examples
    --------
    >>> fbm_sigma2(Point.of(1), Point.of(1), 0.5)
    0.0
    >>> fbm_sigma2(Point.of(1), Point.of(5), 0.5)
    4.0
    >>> fbm_sigma2(Point.of(0), Point.of(16), 0.25)
    4.0
    >>> fbm_sigma2(Point.of(0), Point.of(16), 1.5)
    Traceback (most recent call last):
        ...
    ValueError: fbm H must be a real in (0, 1]

    """
    _validate_fbm_hurst(hurst)
    _scalar_pair(s, t)
    return float(fbm_sigma2_array(_points(s), _points(t), hurst)[0])


def fbm_covariance(s: Point, t: Point, hurst: float) -> float:
    """Return the covariance ``½(|s|^{2H} + |t|^{2H} - |t - s|^{2H})`` of the fractional Brownian motion.

    Examples
    --------
    >>> fbm_covariance(Point.of(1), Point.of(3), 0.5)
    1.0
    >>> fbm_covariance(Point.of(1), Point.of(1), 0.3)
    1.0
    >>> fbm_covariance(Point.of(0), Point.of(2), 0.7)
    0.0

    """
    _validate_fbm_hurst(hurst)
    _scalar_pair(s, t)
    return float(fbm_covariance_array(_points(s), _points(t), hurst)[0])


def fbm_kernel(hurst: float, dimension: int = 1) -> IncrementKernel:
    """Build the kernel of the fractional Brownian motion of Hurst index `hurst`.

    For ``dimension > 1`` it is the isotropic (Lévy) fractional Brownian field, using euclidean
    norms.
    """
    _validate_fbm_hurst(hurst)
    return IncrementKernel(
        family=KernelFamily.FBM,
        dimension=dimension,
        params={"H": float(hurst)},
        sigma2_function=lambda s, t: fbm_sigma2_array(s, t, hurst),
        covariance_function=lambda s, t: fbm_covariance_array(s, t, hurst),
    )


# multiparameter fractional Brownian motion


def mpfbm_sigma2_array(s: np.ndarray, t: np.ndarray, hurst: float) -> np.ndarray:
    """Return ``m([0, s] △ [0, t])^{2H}`` for each pair of rows of `s` and `t`."""
    return sym_diff_array(s, t) ** (2 * hurst)


def mpfbm_covariance_array(s: np.ndarray, t: np.ndarray, hurst: float) -> np.ndarray:
    """Return ``½[m([0, s])^{2H} + m([0, t])^{2H} - m([0, s] △ [0, t])^{2H}]`` for each pair."""
    return 0.5 * (
        corner_volume_array(s) ** (2 * hurst)
        + corner_volume_array(t) ** (2 * hurst)
        - mpfbm_sigma2_array(s, t, hurst)
    )


def mpfbm_covariance(s: Point, t: Point, hurst: float) -> float:
    """Return the covariance of the multiparameter fractional Brownian motion.

    Raises
    ------
    ValueError
        If `hurst` is not in ``(0, ½]``.
    DimensionMismatchError
        If `s` and `t` do not have the same dimension.

    Examples
    --------
    >>> mpfbm_covariance(Point.of(1, 1), Point.of(1, 1), 0.5)
    1.0
    >>> mpfbm_covariance(Point.of(1, 1), Point.of(2, 1), 0.5)
    1.0
    >>> mpfbm_covariance(Point.of(1, 1), Point.of(2, 0), 0.4)
    0.0

    """
    _validate_mpfbm_hurst(hurst)
    if s.dimension != t.dimension:
        raise DimensionMismatchError("points must have the same dimension")
    return float(mpfbm_covariance_array(_points(s), _points(t), hurst)[0])


def mpfbm_sigma2(s: Point, t: Point, hurst: float) -> float:
    """Return the incremental variance ``m([0, s] △ [0, t])^{2H}`` of the multiparameter fBm.

    Examples
    --------
    >>> mpfbm_sigma2(Point.of(1, 1), Point.of(1, 1), 0.4)
    0.0
    >>> mpfbm_sigma2(Point.of(1, 1), Point.of(2, 1), 0.5)
    1.0
    >>> round(mpfbm_sigma2(Point.of(1, 1), Point.of(2, 2), 0.25), 7)
    1.7320508
    >>> mpfbm_sigma2(Point.of(1, 1), Point.of(2, 1), 0.6)
    Traceback (most recent call last):
        ...
    ValueError: mpfbm H must be a real in (0, 0.5]

    """
    _validate_mpfbm_hurst(hurst)
    if s.dimension != t.dimension:
        raise DimensionMismatchError("points must have the same dimension")
    return float(mpfbm_sigma2_array(_points(s), _points(t), hurst)[0])


def mpfbm_kernel(hurst: float, dimension: int = 2) -> IncrementKernel:
    """Build the kernel of the multiparameter fractional Brownian motion indexed by ``R₊^N``."""
    _validate_mpfbm_hurst(hurst)
    return IncrementKernel(
        family=KernelFamily.MPFBM,
        dimension=dimension,
        params={"H": float(hurst)},
        sigma2_function=lambda s, t: mpfbm_sigma2_array(s, t, hurst),
        covariance_function=lambda s, t: mpfbm_covariance_array(s, t, hurst),
    )


# multifractional Brownian motion, asymptotic form


def mbm_sigma2_asymptotic_array(
    s: np.ndarray,
    t: np.ndarray,
    profile: HurstProfile,
    k_const: float = 1.0,
    l_const: float = 1.0,
) -> np.ndarray:
    """Return ``K·|t - s|^{H(t) + H(s)} + L·(H(t) - H(s))²`` for each pair of rows."""
    s, t = np.asarray(s)[:, 0], np.asarray(t)[:, 0]
    h_s, h_t = profile.values(s), profile.values(t)
    return k_const * np.abs(t - s) ** (h_t + h_s) + l_const * (h_t - h_s) ** 2


def mbm_sigma2_asymptotic(
    s: Point,
    t: Point,
    t0: Point,
    profile: HurstProfile,
    k_const: float = 1.0,
    l_const: float = 1.0,
) -> float:
    """Return the asymptotic incremental variance of the mBm near `t0`.

    The form ``K·|t - s|^{H(t) + H(s)} + L·(H(t) - H(s))²`` is an equivalence when ``s, t → t₀``:
    it should only be used in small balls around `t0`, where ``K = K(t₀)`` and ``L = L(t₀)``.

    Raises
    ------
    OutOfDomainError
        If a point is outside the domain of the profile.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import affine_profile, constant_profile
    >>> half = constant_profile(0.5)
    >>> round(mbm_sigma2_asymptotic(Point.of(0.5), Point.of(0.75), Point.of(0.5), half), 12)
    0.25
    >>> value = mbm_sigma2_asymptotic(
    ...     Point.of(0.5), Point.of(0.6), Point.of(0.5), affine_profile(0.3, 0.4)
    ... )
    >>> bool(abs(value - (0.1 ** 1.04 + 0.0016)) < 1e-12)
    True

    """
    kernel = mbm_asymptotic_kernel(profile, t0, k_const, l_const)
    return kernel.sigma2(s, t)


def mbm_asymptotic_kernel(
    profile: HurstProfile,
    t0: Union[Point, float],
    k_const: float = 1.0,
    l_const: float = 1.0,
) -> IncrementKernel:
    """Build the asymptotic kernel of the multifractional Brownian motion around `t0`.

    It has no covariance: it is only meant for exponent estimations.
    """
    center = t0.coords[0] if isinstance(t0, Point) else float(t0)
    validate_positive_real(k_const, False, "mbm K")
    validate_positive_real(l_const, False, "mbm L")
    return IncrementKernel(
        family=KernelFamily.MBM_ASYMPTOTIC,
        dimension=1,
        params={"t0": center, "K": float(k_const), "L": float(l_const)},
        profile=profile,
        sigma2_function=lambda s, t: mbm_sigma2_asymptotic_array(
            s, t, profile, k_const, l_const
        ),
    )


# generalized Weierstrass function


def _validate_gw(lam: float, truncation: int) -> None:
    if isinstance(lam, bool) or not isinstance(lam, (int, float)) or not lam >= 2:
        raise ValueError("gw lambda must be a real greater than or equal to 2")
    if isinstance(truncation, bool) or not isinstance(truncation, int) or truncation < 1:
        raise ValueError("gw J must be a positive integer")


def max_gw_truncation(lam: float) -> int:
    """Return the largest truncation keeping the frequencies ``λ^J`` below ``1e300``."""
    return int(300 / math.log10(lam))


def _gw_amplitudes(values: np.ndarray, lam: float, truncation: int) -> np.ndarray:
    # a[i, j - 1] = λ^{-j·H(t_i)}
    orders = np.arange(1, truncation + 1)
    return np.exp(-np.outer(values, orders) * math.log(lam))


def _gw_parts(
    u: np.ndarray, v: np.ndarray, profile: HurstProfile, lam: float, truncation: int
) -> Tuple[np.ndarray, np.ndarray]:
    # The "power" and "profile" parts of the incremental variance.
    frequencies = lam ** np.arange(1, truncation + 1, dtype=float)
    power = np.empty(len(u))
    shape = np.empty(len(u))
    for start in range(0, len(u), PAIRS_CHUNK):
        chunk = slice(start, start + PAIRS_CHUNK)
        amp_u = _gw_amplitudes(profile.values(u[chunk]), lam, truncation)
        amp_v = _gw_amplitudes(profile.values(v[chunk]), lam, truncation)
        sines = np.sin(np.outer(u[chunk] - v[chunk], frequencies) / 2)
        power[chunk] = 2 * np.sum(amp_u * amp_v * sines ** 2, axis=1)
        shape[chunk] = 0.5 * np.sum((amp_v - amp_u) ** 2, axis=1)
    return power, shape


def gw_sigma2_array(
    u: np.ndarray, v: np.ndarray, profile: HurstProfile, lam: float, truncation: int
) -> np.ndarray:
    """Return the incremental variance of the truncated generalized Weierstrass function.

    It is ``2·Σ_{j≤J} λ^{-j(H(u)+H(v))} sin²(λʲ(u - v)/2) + ½·Σ_{j≤J} (λ^{-jH(v)} - λ^{-jH(u)})²``
    for each pair of rows of `u` and `v`. For a constant profile it reduces to
    ``2·Σ_{j≤J} λ^{-2jH} sin²(λʲ(u - v)/2)``.
    """
    power, shape = _gw_parts(
        np.asarray(u)[:, 0], np.asarray(v)[:, 0], profile, lam, truncation
    )
    return power + shape


def gw_covariance_array(
    u: np.ndarray, v: np.ndarray, profile: HurstProfile, lam: float, truncation: int
) -> np.ndarray:
    """Return ``½·Σ_{j≤J} λ^{-j(H(u)+H(v))} cos(λʲ(u - v))``, the covariance of the series."""
    u, v = np.asarray(u)[:, 0], np.asarray(v)[:, 0]
    frequencies = lam ** np.arange(1, truncation + 1, dtype=float)
    amp_u = _gw_amplitudes(profile.values(u), lam, truncation)
    amp_v = _gw_amplitudes(profile.values(v), lam, truncation)
    return 0.5 * np.sum(amp_u * amp_v * np.cos(np.outer(u - v, frequencies)), axis=1)


def gw_tail_bound(profile: HurstProfile, lam: float, truncation: int) -> float:
    """Bound the part of the incremental variance left out by the truncation at `truncation`.

    With ``h = inf H`` over the domain, both neglected sums are bounded by
    ``2·λ^{-2(J+1)h}/(1 - λ^{-2h})`` and ``½·λ^{-2(J+1)h}/(1 - λ^{-2h})``.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> bound = gw_tail_bound(constant_profile(0.5), 2.0, 30)
    >>> bool(abs(bound - 3 * 2.0 ** -31 / 0.5) < 1e-20)
    True

    """
    _validate_gw(lam, truncation)
    decay = lam ** (-2 * profile.bounds()[0])
    return 3 * decay ** (truncation + 1) / (1 - decay)


def gw_default_truncation(
    profile: HurstProfile, lam: float, tolerance: float = GW_TAIL_TOLERANCE
) -> int:
    """Return the smallest truncation whose tail bound is below `tolerance`.

    The truncation is capped by :obj:`max_gw_truncation`; a warning is logged when the cap is
    reached before the tolerance.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> truncation = gw_default_truncation(constant_profile(0.5), 2.0)
    >>> gw_tail_bound(constant_profile(0.5), 2.0, truncation) < 1e-12
    True
    >>> gw_tail_bound(constant_profile(0.5), 2.0, truncation - 1) < 1e-12
    False

    """
    _validate_gw(lam, 1)
    decay = lam ** (-2 * profile.bounds()[0])
    # 3·decay^{J+1}/(1 - decay) < tolerance
    needed = math.log(tolerance * (1 - decay) / 3) / math.log(decay) - 1
    truncation = max(1, math.floor(needed) + 1)
    while truncation > 1 and 3 * decay ** truncation / (1 - decay) < tolerance:
        truncation -= 1
    while 3 * decay ** (truncation + 1) / (1 - decay) >= tolerance:
        truncation += 1
    cap = max_gw_truncation(lam)
    if truncation > cap:
        logger.warning(
            "Weierstrass truncation capped at %d terms, the tail bound stays above %g",
            cap,
            tolerance,
        )
        truncation = cap
    return truncation


def gw_sigma2(
    u: Point,
    v: Point,
    profile: HurstProfile,
    lam: float = 2.0,
    truncation: Optional[int] = None,
) -> float:
    """Return the incremental variance of the generalized Weierstrass function between `u` and `v`.

    Parameters
    ----------
    u, v : Point
        Scalar points in the domain of `profile`.
    profile : HurstProfile
        The Hurst profile.
    lam : float
        The frequency ratio ``λ ≥ 2``.
    truncation : Optional[int]
        The number ``J ≥ 1`` of terms, by default given by :obj:`gw_default_truncation`.

    Raises
    ------
    ValueError
        If ``λ < 2`` or ``J < 1``.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> half = constant_profile(0.5)
    >>> gw_sigma2(Point.of(0.3), Point.of(0.3), half)
    0.0
    >>> gw_sigma2(Point.of(0.3), Point.of(0.5), half, lam=1.5)
    Traceback (most recent call last):
        ...
    ValueError: gw lambda must be a real greater than or equal to 2

    """
    if truncation is None:
        truncation = gw_default_truncation(profile, lam)
    return gw_kernel(profile, lam, truncation).sigma2(u, v)


def gw_kernel(
    profile: HurstProfile, lam: float = 2.0, truncation: Optional[int] = None
) -> IncrementKernel:
    """Build the kernel of the generalized Weierstrass function.

    The truncation ``J`` and its tail bound are reported in the parameters of the kernel. The
    covariance is the one of the truncated series.
    """
    if truncation is None:
        truncation = gw_default_truncation(profile, lam)
    _validate_gw(lam, truncation)
    lam = float(lam)
    return IncrementKernel(
        family=KernelFamily.GW,
        dimension=1,
        params={
            "lambda": lam,
            "J": truncation,
            "tail_bound": gw_tail_bound(profile, lam, truncation),
        },
        profile=profile,
        sigma2_function=lambda u, v: gw_sigma2_array(u, v, profile, lam, truncation),
        covariance_function=lambda u, v: gw_covariance_array(
            u, v, profile, lam, truncation
        ),
    )


def gw_sandwich_constants(
    profile: HurstProfile,
    t0: float,
    rho: float,
    epsilon: float,
    lam: float = 2.0,
    truncation: Optional[int] = None,
    count: int = 2000,
    seed: int = 0,
) -> Tuple[float, float, Optional[float], Optional[float]]:
    """Fit the constants of the sandwich of the Weierstrass incremental variance in ``B(t₀, ρ)``.

    The incremental variance is split in its "power" part ``P`` and its "profile" part ``Q``.
    With ``d = |u - v|``, ``ΔH = H(u) - H(v)`` and ``H₀ = H(t₀)``, the constants are fitted so that
    on every sampled pair::

        c₁·d^{2H₀+ε} + c₃·ΔH² ≤ σ²(u, v) ≤ c₂·d^{2H₀-ε} + c₄·ΔH²

    Returns
    -------
    Tuple[float, float, Optional[float], Optional[float]]
        ``(c₁, c₂, c₃, c₄)``. ``c₃`` and ``c₄`` are ``None`` when ``ΔH`` vanishes on every pair.

    """
    if truncation is None:
        truncation = gw_default_truncation(profile, lam)
    _validate_gw(lam, truncation)
    ball = BallSpec(center=Point.of(t0), radius=rho)
    u, v = sample_ball_pair_arrays(ball, count, "quasi-random", seed)
    power, shape = _gw_parts(u[:, 0], v[:, 0], profile, lam, truncation)
    distances = np.abs(u[:, 0] - v[:, 0])
    center_value = float(profile.values(np.array([t0]))[0])
    c_one = float(np.min(power / distances ** (2 * center_value + epsilon)))
    c_two = float(np.max(power / distances ** (2 * center_value - epsilon)))
    gaps = (profile.values(u[:, 0]) - profile.values(v[:, 0])) ** 2
    moving = gaps > 0
    if not moving.any():
        return c_one, c_two, None, None
    ratios = shape[moving] / gaps[moving]
    return c_one, c_two, float(ratios.min()), float(ratios.max())


# multifractional Brownian motion, spectral discretization


def spectral_frequencies(
    length: float, freq_cutoff: float, freq_bins: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Return the log-spaced frequency bins ``(ξ_k, Δξ_k)`` of the spectral discretization.

    The bins go from ``2π/(10·length)`` to `freq_cutoff`; ``ξ_k`` is the geometric center of the
    bin ``k`` and ``Δξ_k`` its width.

    Raises
    ------
    ValueError
        If `freq_bins` is below 16 or the cutoff is not above the lowest frequency.

    Examples
    --------
    >>> centers, widths = spectral_frequencies(1.0, 2 * np.pi * 1024, 2048)
    >>> centers.shape, bool(np.all(np.diff(centers) > 0)), bool(np.all(widths > 0))
    ((2048,), True, True)

    """
    if isinstance(freq_bins, bool) or not isinstance(freq_bins, int) or freq_bins < MIN_FREQ_BINS:
        raise ValueError(f"mbm frequency bins must be an integer of at least {MIN_FREQ_BINS}")
    lowest = 2 * math.pi / (10 * length)
    if not freq_cutoff > lowest:
        raise ValueError("mbm frequency cutoff must be above the lowest frequency")
    edges = np.geomspace(lowest, freq_cutoff, freq_bins + 1)
    return np.sqrt(edges[:-1] * edges[1:]), np.diff(edges)


def _spectral_weights(
    t: np.ndarray, profile: HurstProfile, centers: np.ndarray, widths: np.ndarray
) -> np.ndarray:
    # b[i, k] = ξ_k^{-H(t_i)-½}·√Δξ_k
    exponents = profile.values(t)[:, None] + 0.5
    return np.exp(-exponents * np.log(centers)[None, :]) * np.sqrt(widths)[None, :]


def spectral_components(
    t: np.ndarray, profile: HurstProfile, centers: np.ndarray, widths: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Return the coefficients of the Gaussian variables ``(g_k, g'_k)`` in ``X_t``.

    ``X_t = Σ_k a[t, k]·g_k + b[t, k]·g'_k`` with ``a = (cos(tξ_k) - 1)·w_k(t)`` and
    ``b = sin(tξ_k)·w_k(t)``, where ``w_k(t) = ξ_k^{-H(t)-½}·√Δξ_k``.
    """
    t = np.asarray(t, dtype=float)
    weights = _spectral_weights(t, profile, centers, widths)
    phases = np.outer(t, centers)
    return (np.cos(phases) - 1) * weights, np.sin(phases) * weights


def mbm_spectral_sigma2_array(
    s: np.ndarray,
    t: np.ndarray,
    profile: HurstProfile,
    centers: np.ndarray,
    widths: np.ndarray,
) -> np.ndarray:
    """Return the exact incremental variance of the spectral discretization for each pair."""
    s, t = np.asarray(s)[:, 0], np.asarray(t)[:, 0]
    result = np.empty(len(s))
    for start in range(0, len(s), PAIRS_CHUNK):
        chunk = slice(start, start + PAIRS_CHUNK)
        cos_s, sin_s = spectral_components(s[chunk], profile, centers, widths)
        cos_t, sin_t = spectral_components(t[chunk], profile, centers, widths)
        result[chunk] = np.sum((cos_t - cos_s) ** 2 + (sin_t - sin_s) ** 2, axis=1)
    return result


def mbm_spectral_covariance_array(
    s: np.ndarray,
    t: np.ndarray,
    profile: HurstProfile,
    centers: np.ndarray,
    widths: np.ndarray,
) -> np.ndarray:
    """Return the exact covariance of the spectral discretization for each pair."""
    s, t = np.asarray(s)[:, 0], np.asarray(t)[:, 0]
    result = np.empty(len(s))
    for start in range(0, len(s), PAIRS_CHUNK):
        chunk = slice(start, start + PAIRS_CHUNK)
        cos_s, sin_s = spectral_components(s[chunk], profile, centers, widths)
        cos_t, sin_t = spectral_components(t[chunk], profile, centers, widths)
        result[chunk] = np.sum(cos_s * cos_t + sin_s * sin_t, axis=1)
    return result


def default_freq_cutoff(resolution: int, length: float = 1.0) -> float:
    """Return the default frequency cutoff ``2π/step`` for `resolution` points spread on `length`.

    The sampled path keeps its roughness down to the grid step, whatever the length of the grid.

    Examples
    --------
    >>> round(default_freq_cutoff(1025) / math.pi)
    2048
    >>> round(default_freq_cutoff(1025, 0.1) / math.pi)
    20480

    """
    return 2 * math.pi * max(resolution - 1, 1) / length


def mbm_spectral_kernel(
    profile: HurstProfile,
    freq_cutoff: Optional[float] = None,
    freq_bins: int = DEFAULT_FREQ_BINS,
    resolution: int = 1024,
) -> IncrementKernel:
    """Build the exact kernel of the spectral discretization of the harmonizable mBm.

    Parameters
    ----------
    profile : HurstProfile
        The Hurst profile.
    freq_cutoff : Optional[float]
        The highest frequency, by default ``2π/step`` for `resolution` points on the domain of
        the profile.
    freq_bins : int
        The number of log-spaced frequency bins, at least 16.
    resolution : int
        The grid resolution used for the default cutoff.

    """
    length = profile.domain.upper.coords[0] - profile.domain.lower.coords[0]
    if freq_cutoff is None:
        freq_cutoff = default_freq_cutoff(resolution, length)
    centers, widths = spectral_frequencies(length, freq_cutoff, freq_bins)
    return IncrementKernel(
        family=KernelFamily.MBM_SPECTRAL,
        dimension=1,
        params={
            "freq_cutoff": float(freq_cutoff),
            "freq_bins": freq_bins,
            "xi_min": float(2 * math.pi / (10 * length)),
        },
        profile=profile,
        sigma2_function=lambda s, t: mbm_spectral_sigma2_array(
            s, t, profile, centers, widths
        ),
        covariance_function=lambda s, t: mbm_spectral_covariance_array(
            s, t, profile, centers, widths
        ),
    )


# any family

_BUILDERS: Dict[KernelFamily, Callable[..., IncrementKernel]] = {
    KernelFamily.FBM: lambda dimension, params, profile: fbm_kernel(
        params["H"], dimension
    ),
    KernelFamily.MPFBM: lambda dimension, params, profile: mpfbm_kernel(
        params["H"], dimension
    ),
    KernelFamily.MBM_ASYMPTOTIC: lambda dimension, params, profile: mbm_asymptotic_kernel(
        profile, params["t0"], params.get("K", 1.0), params.get("L", 1.0)
    ),
    KernelFamily.GW: lambda dimension, params, profile: gw_kernel(
        profile,
        params.get("lambda", 2.0),
        None if params.get("J") is None else int(params["J"]),
    ),
    KernelFamily.MBM_SPECTRAL: lambda dimension, params, profile: mbm_spectral_kernel(
        profile,
        params.get("freq_cutoff"),
        int(params.get("freq_bins", DEFAULT_FREQ_BINS)),
        int(params.get("resolution", 1024)),
    ),
}

_PROFILED = {KernelFamily.MBM_ASYMPTOTIC, KernelFamily.GW, KernelFamily.MBM_SPECTRAL}


def build_kernel(
    family: Union[KernelFamily, str],
    params: Mapping[str, Any],
    dimension: int = 1,
    profile: Optional[HurstProfile] = None,
) -> IncrementKernel:
    """Build the kernel of the given `family` from its parameters.

    Raises
    ------
    ConfigError
        If the family is unknown, a parameter is missing, or the profile is missing.

    Examples
    --------
    >>> kernel = build_kernel("fbm", {"H": 0.3})
    >>> kernel.family, kernel.params
    (<KernelFamily.FBM: 'fbm'>, {'H': 0.3})
    >>> build_kernel("fbm", {})
    Traceback (most recent call last):
        ...
    gflab.domain.utils.errors.ConfigError: kernel[fbm]: missing parameter 'H'

    """
    try:
        family = KernelFamily(family)
    except ValueError as exception:
        raise ConfigError(f"unknown kernel family {family!r}") from exception
    context = f"kernel[{family.value}]"
    if family in _PROFILED and profile is None:
        raise ConfigError("a Hurst profile is required", context=context)
    try:
        return _BUILDERS[family](dimension, dict(params), profile)
    except KeyError as exception:
        raise ConfigError(f"missing parameter {exception}", context=context) from exception
