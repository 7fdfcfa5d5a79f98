"""Estimation of the deterministic local exponents of a kernel, and of the sandwich around them.

At a radius ``ρ``, pairs ``(s, t)`` are sampled in ``B(t₀, ρ)`` and the ratios::

    r(s, t) = log σ²(s, t) / (2·log d₂(s, t))

are computed. As the balls shrink, the smallest ratio increases to the local exponent
``α̃(t₀)`` and the largest one decreases to the local sub-exponent ``α̲(t₀)``. No convergence rate
is assumed: the estimates are the values at the last radius of the ladder, reported with the
changes of the last step and the monotonicity of the ratios along the ladder.

Pair sets are drawn from ``derive_seed(seed, index)`` for the radius of rank ``index``: an estimate
and the sandwich check of the same kernel with the same seed see the same pairs.

"""
import logging
import math
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from gflab.domain.contexts.geometry.entities import BallSpec, Point
from gflab.domain.contexts.geometry.measures import dist_array
from gflab.domain.contexts.geometry.sampling import PairStrategy, sample_ball_pair_arrays
from gflab.domain.contexts.kernels.entities import IncrementKernel
from gflab.domain.utils.entity import validate_positive_integer, validate_positive_real
from gflab.domain.utils.errors import (
    DegenerateKernelError,
    DimensionMismatchError,
    InvalidEpsilonError,
)
from gflab.domain.utils.random import derive_seed

from ..entities import ExponentEstimate, SandwichReport, SandwichViolation


logger = logging.getLogger(__name__)

#: Exponents ``k`` of the default ladder of radii ``2⁻ᵏ``.
DEFAULT_LADDER_EXPONENTS = (3, 10)

#: Default number of pairs sampled in each ball.
DEFAULT_PAIRS_PER_RHO = 2000

#: Largest ratio reported as finite, above it the sub-exponent is infinite.
DEFAULT_CAP = 50.0

#: Pairs whose incremental variance does not exceed this value are excluded from the ratios.
SIGMA2_FLOOR = 1e-300

#: Number of violations kept as examples at each radius by :obj:`sandwich_check`.
VIOLATIONS_PER_RHO = 5

# slack on the monotonicity of the ratios along the ladder
_MONOTONE_TOLERANCE = 1e-12

Ladder = Tuple[float, ...]


class RadiusScan(NamedTuple):
    """The pairs sampled in one ball, with their distances and incremental variances."""

    rho: float
    s: np.ndarray
    t: np.ndarray
    distances: np.ndarray
    sigma2: np.ndarray

    @property
    def valid(self) -> np.ndarray:
        """Return the mask of the pairs usable in a ratio."""
        return (self.sigma2 > SIGMA2_FLOOR) & (self.distances < 1)

    def ratios(self) -> np.ndarray:
        """Return ``log σ² / (2·log d)`` for the valid pairs."""
        valid = self.valid
        return np.log(self.sigma2[valid]) / (2 * np.log(self.distances[valid]))


def dyadic_ladder(
    first: int = DEFAULT_LADDER_EXPONENTS[0], last: int = DEFAULT_LADDER_EXPONENTS[1]
) -> Ladder:
    """Return the radii ``2^-first, ..., 2^-last``.

    Examples
    --------
    >>> dyadic_ladder(3, 5)
    (0.125, 0.0625, 0.03125)
    >>> len(dyadic_ladder())
    8

    """
    if last < first:
        raise ValueError("the last exponent of a ladder must not be below the first one")
    return tuple(2.0 ** -exponent for exponent in range(first, last + 1))


def check_ladder(rho_ladder: Optional[Sequence[float]]) -> Ladder:
    """Return `rho_ladder` as a tuple, or the default ladder when ``None``.

    Raises
    ------
    ValueError
        If the ladder is empty, or not made of strictly decreasing positive reals.

    Examples
    --------
    >>> check_ladder([0.5, 0.25])
    (0.5, 0.25)
    >>> check_ladder([0.25, 0.5])
    Traceback (most recent call last):
        ...
    ValueError: rho_ladder must be strictly decreasing

    """
    if rho_ladder is None:
        return dyadic_ladder()
    ladder = tuple(float(rho) for rho in rho_ladder)
    if not ladder:
        raise ValueError("rho_ladder must not be empty")
    for rho in ladder:
        validate_positive_real(rho, False, "rho_ladder")
    if any(later >= earlier for earlier, later in zip(ladder, ladder[1:])):
        raise ValueError("rho_ladder must be strictly decreasing")
    return ladder


def scan_radius(
    kernel: IncrementKernel,
    t0: Point,
    rho: float,
    count: int,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    seed: int = 0,
) -> RadiusScan:
    """Sample `count` pairs in ``B(t₀, ρ)`` and evaluate `kernel` on them."""
    s, t = sample_ball_pair_arrays(BallSpec(center=t0, radius=rho), count, strategy, seed)
    return RadiusScan(
        rho=rho, s=s, t=t, distances=dist_array(s, t), sigma2=kernel.sigma2_array(s, t)
    )


def scan_ladder(
    kernel: IncrementKernel,
    t0: Point,
    rho_ladder: Ladder,
    count: int,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    seed: int = 0,
) -> List[RadiusScan]:
    """Run :obj:`scan_radius` at every radius of the ladder, each with its own seed."""
    if t0.dimension != kernel.dimension:
        raise DimensionMismatchError(
            f"t0 must have dimension {kernel.dimension}", context=kernel.label
        )
    validate_positive_integer(count, False, "pairs_per_rho")
    return [
        scan_radius(kernel, t0, rho, count, strategy, derive_seed(seed, index))
        for index, rho in enumerate(rho_ladder)
    ]


def _last_change(values: Sequence[float]) -> Optional[float]:
    if len(values) < 2 or not all(math.isfinite(value) for value in values[-2:]):
        return None
    return values[-1] - values[-2]


def _diagnostics(
    scans: Sequence[RadiusScan],
    inf_ratio: Sequence[float],
    sup_ratio: Sequence[float],
    strategy: PairStrategy,
    seed: int,
) -> Dict[str, Any]:
    return {
        "excluded_pairs": [int(len(scan.sigma2) - scan.valid.sum()) for scan in scans],
        "inf_change": _last_change(inf_ratio),
        "sup_change": _last_change(sup_ratio),
        "inf_monotone": all(
            later >= earlier - _MONOTONE_TOLERANCE
            for earlier, later in zip(inf_ratio, inf_ratio[1:])
        ),
        "sup_monotone": all(
            later <= earlier + _MONOTONE_TOLERANCE
            for earlier, later in zip(sup_ratio, sup_ratio[1:])
        ),
        "strategy": strategy.value,
        "seed": seed,
    }


def kernel_exponents(
    kernel: IncrementKernel,
    t0: Point,
    rho_ladder: Optional[Sequence[float]] = None,
    pairs_per_rho: int = DEFAULT_PAIRS_PER_RHO,
    seed: int = 0,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    cap: float = DEFAULT_CAP,
) -> ExponentEstimate:
    """Estimate the deterministic local exponent and sub-exponent of `kernel` at `t0`.

    Parameters
    ----------
    kernel : IncrementKernel
        The kernel, defined on every ball of the ladder.
    t0 : Point
        The center of the balls.
    rho_ladder : Optional[Sequence[float]]
        Strictly decreasing radii, by default ``2⁻³, ..., 2⁻¹⁰``.
    pairs_per_rho : int
        The number of pairs sampled in each ball.
    seed : int
        The seed of the sampling.
    strategy : Union[PairStrategy, str]
        ``quasi-random`` (the pairs for a count are the first pairs for any larger count) or
        ``grid`` (the pairs include the center of the ball).
    cap : float
        Largest ratio kept as finite: a larger supremum is reported as ``inf``.

    Returns
    -------
    ExponentEstimate
        The ratios at each radius and the estimates, the values at the last radius.

    Raises
    ------
    DegenerateKernelError
        If the incremental variance vanishes on all the pairs sampled in a ball.
    DimensionMismatchError
        If `t0` does not have the dimension of the kernel.
    RadiusTooSmallError
        If a radius is too small to sample pairs around `t0`.
    OutOfDomainError
        If a ball leaves the domain of the profile of the kernel.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.families import fbm_kernel
    >>> estimate = kernel_exponents(fbm_kernel(0.3), Point.of(0.5), pairs_per_rho=200)
    >>> round(estimate.alpha_tilde_hat, 9), round(estimate.alpha_under_hat, 9)
    (0.3, 0.3)

    """
    ladder = check_ladder(rho_ladder)
    strategy = PairStrategy(strategy)
    validate_positive_real(cap, False, "cap")
    scans = scan_ladder(kernel, t0, ladder, pairs_per_rho, strategy, seed)
    inf_ratio: List[float] = []
    sup_ratio: List[float] = []
    for scan in scans:
        ratios = scan.ratios()
        if not len(ratios):
            raise DegenerateKernelError(
                f"the incremental variance vanishes on every pair sampled at radius "
                f"{scan.rho:g} around {t0.coords}",
                context=kernel.label,
            )
        highest = float(ratios.max())
        inf_ratio.append(float(ratios.min()))
        sup_ratio.append(math.inf if highest > cap else highest)
        logger.debug(
            "%s at radius %g: ratios in [%.6g, %.6g] over %d pairs",
            kernel.label,
            scan.rho,
            inf_ratio[-1],
            highest,
            len(ratios),
        )
    estimate = ExponentEstimate(
        t0=t0,
        rho_ladder=ladder,
        inf_ratio=inf_ratio,
        sup_ratio=sup_ratio,
        alpha_tilde_hat=inf_ratio[-1],
        alpha_under_hat=sup_ratio[-1],
        pair_count=pairs_per_rho,
        diagnostics=_diagnostics(scans, inf_ratio, sup_ratio, strategy, seed),
    )
    logger.info(
        "Exponents of %s at %s: %.6g and %.6g",
        kernel.label,
        t0.coords,
        estimate.alpha_tilde_hat,
        estimate.alpha_under_hat,
    )
    return estimate


def _sandwich_bounds(
    distances: np.ndarray, estimate: ExponentEstimate, epsilon: float
) -> Tuple[np.ndarray, np.ndarray]:
    if math.isinf(estimate.alpha_under_hat):
        lower = np.zeros_like(distances)
    else:
        lower = distances ** (2 * estimate.alpha_under_hat + epsilon)
    upper = distances ** (2 * estimate.alpha_tilde_hat - epsilon)
    return lower, upper


def sandwich_check(
    kernel: IncrementKernel,
    t0: Point,
    epsilon: float,
    rho_ladder: Optional[Sequence[float]] = None,
    pairs_per_rho: int = DEFAULT_PAIRS_PER_RHO,
    seed: int = 0,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    cap: float = DEFAULT_CAP,
) -> SandwichReport:
    """Check ``d^{2α̲+ε} ≤ σ²(s, t) ≤ d^{2α̃-ε}`` on the pairs sampled in balls around `t0`.

    The exponents are first estimated by :obj:`kernel_exponents` with the same arguments, so the
    bounds are checked on the very pairs the exponents come from.

    Returns
    -------
    SandwichReport
        The violations at each radius, and the largest radius ``ρ₀`` such that no pair violates
        the bounds at ``ρ₀`` or any smaller radius of the ladder.

    Raises
    ------
    InvalidEpsilonError
        If ``ε ≥ 2α̃``, as the upper bound would not vanish with the distance.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.families import fbm_kernel
    >>> report = sandwich_check(fbm_kernel(0.5), Point.of(0.5), 0.1, [0.25, 0.125], 100)
    >>> report.rho0_found, report.violation_count
    (0.25, 0)
    >>> sandwich_check(fbm_kernel(0.3), Point.of(0.5), 0.7, [0.25, 0.125], 100)
    Traceback (most recent call last):
        ...
    gflab.domain.utils.errors.InvalidEpsilonError: kernel[fbm]: epsilon 0.7 must be below 2·α̃ = 0.6

    """
    validate_positive_real(epsilon, False, "epsilon")
    estimate = kernel_exponents(
        kernel, t0, rho_ladder, pairs_per_rho, seed, strategy, cap
    )
    if epsilon >= 2 * estimate.alpha_tilde_hat:
        raise InvalidEpsilonError(
            f"epsilon {epsilon:g} must be below 2·α̃ = {2 * estimate.alpha_tilde_hat:g}",
            context=kernel.label,
        )
    scans = scan_ladder(
        kernel, t0, estimate.rho_ladder, pairs_per_rho, PairStrategy(strategy), seed
    )
    counts: List[int] = []
    violations: List[SandwichViolation] = []
    for scan in scans:
        lower, upper = _sandwich_bounds(scan.distances, estimate, epsilon)
        failing = np.flatnonzero((scan.sigma2 < lower) | (scan.sigma2 > upper))
        counts.append(len(failing))
        violations.extend(
            SandwichViolation(
                rho=scan.rho,
                s=Point(coords=scan.s[index]),
                t=Point(coords=scan.t[index]),
                sigma2=max(float(scan.sigma2[index]), 0.0),
                lower=float(lower[index]),
                upper=float(upper[index]),
            )
            for index in failing[:VIOLATIONS_PER_RHO]
        )
    rho0_found: Optional[float] = None
    for rho, count in zip(reversed(estimate.rho_ladder), reversed(counts)):
        if count:
            break
        rho0_found = rho
    if rho0_found is None:
        logger.warning(
            "%s: %d pair(s) violate the sandwich at the smallest radius %g",
            kernel.label,
            counts[-1],
            estimate.rho,
        )
    return SandwichReport(
        t0=t0,
        epsilon=epsilon,
        alpha_tilde_hat=estimate.alpha_tilde_hat,
        alpha_under_hat=estimate.alpha_under_hat,
        rho_ladder=estimate.rho_ladder,
        violation_counts=counts,
        violations=violations,
        rho0_found=rho0_found,
    )
