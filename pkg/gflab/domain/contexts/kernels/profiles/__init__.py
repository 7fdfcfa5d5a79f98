"""Construction and evaluation of Hurst profiles, and their declared regularity.

The local exponent ``α̃_H(t₀)`` and sub-exponent ``α̲_H(t₀)`` of a profile are never estimated
here: they are either declared on a marked point, or known analytically for the built-in kinds.
When neither applies, :obj:`profile_exponents` answers "unknown" instead of guessing.

"""
import math
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.utils.errors import OutOfDomainError

from ..entities import HolderExponents, HurstProfile, MarkedPoint, ProfileKind


#: Default domain of the built-in profiles.
DEFAULT_DOMAIN = (0.0, 1.0)

Interval = Tuple[float, float]


def _domain(domain: Interval) -> Box:
    return Box.of([domain[0]], [domain[1]])


def constant_profile(value: float, domain: Interval = DEFAULT_DOMAIN) -> HurstProfile:
    """Create the profile ``H ≡ value``.

    Examples
    --------
    >>> profile_eval(constant_profile(0.5), 0.7)
    0.5

    """
    return HurstProfile(
        kind=ProfileKind.CONSTANT, params=[value], domain=_domain(domain)
    )


def affine_profile(
    intercept: float, slope: float, domain: Interval = DEFAULT_DOMAIN
) -> HurstProfile:
    """Create the profile ``H(t) = intercept + slope·t``, which is 1-Hölder."""
    return HurstProfile(
        kind=ProfileKind.AFFINE,
        params=[intercept, slope],
        domain=_domain(domain),
        declared_beta=math.inf if slope == 0 else 1.0,
    )


def power_cusp_profile(
    base: float,
    coef: float,
    gamma: float,
    cusp: float,
    domain: Interval = DEFAULT_DOMAIN,
) -> HurstProfile:
    """Create the profile ``H(t) = base + coef·|t - cusp|^gamma``.

    The cusp is marked when it lies in the domain: the local exponent there is ``min(gamma, 1)``
    and, as symmetric points around the cusp share the same value, the sub-exponent is infinite.

    Examples
    --------
    >>> profile = power_cusp_profile(0.45, 1.0, 0.3, 0.5, domain=(0.45, 0.55))
    >>> profile.marked_points[0].local_exponent, profile.marked_points[0].sub_exponent
    (0.3, inf)

    """
    marked = []
    if domain[0] <= cusp <= domain[1] and coef != 0:
        marked.append(
            MarkedPoint(t0=cusp, local_exponent=min(gamma, 1.0), sub_exponent=math.inf)
        )
    return HurstProfile(
        kind=ProfileKind.POWER_CUSP,
        params=[base, coef, gamma, cusp],
        domain=_domain(domain),
        declared_beta=math.inf if coef == 0 else min(gamma, 1.0),
        marked_points=marked,
    )


def smooth_periodic_profile(
    base: float,
    amplitude: float,
    period: float,
    phase: float = 0.0,
    domain: Interval = DEFAULT_DOMAIN,
) -> HurstProfile:
    """Create the profile ``H(t) = base + amplitude·sin(2πt/period + phase)``."""
    return HurstProfile(
        kind=ProfileKind.SMOOTH_PERIODIC,
        params=[base, amplitude, period, phase],
        domain=_domain(domain),
        declared_beta=math.inf if amplitude == 0 else 1.0,
    )


def user_table_profile(
    knots: Sequence[Tuple[float, float]],
    marked_points: Iterable[MarkedPoint] = (),
    domain: Optional[Interval] = None,
) -> HurstProfile:
    """Create a piecewise linear profile through the `knots` ``(t, H)``.

    The domain defaults to the span of the knots. Exponents are only known at `marked_points`.
    """
    params = [value for knot in knots for value in knot]
    if domain is None:
        domain = (knots[0][0], knots[-1][0])
    return HurstProfile(
        kind=ProfileKind.USER_TABLE,
        params=params,
        domain=_domain(domain),
        declared_beta=1.0,
        marked_points=tuple(marked_points),
    )


def _check_in_domain(profile: HurstProfile, t: np.ndarray) -> None:
    lower, upper = profile.domain.lower.coords[0], profile.domain.upper.coords[0]
    if np.any(t < lower) or np.any(t > upper):
        raise OutOfDomainError(
            f"the profile is only defined on [{lower:g}, {upper:g}]",
            context=f"profile[{profile.kind.value}]",
        )


def profile_values(profile: HurstProfile, t: np.ndarray) -> np.ndarray:
    """Evaluate `profile` at every value of the array `t`.

    Raises
    ------
    OutOfDomainError
        If a value is outside the domain of the profile.

    """
    t = np.asarray(t, dtype=float)
    _check_in_domain(profile, t)
    return profile.values(t)


def profile_eval(profile: HurstProfile, t: float) -> float:
    """Return ``H(t)``, a real in ``(0, 1)``.

    Raises
    ------
    OutOfDomainError
        If `t` is outside the domain of the profile.

    Examples
    --------
    >>> profile = affine_profile(0.3, 0.4)
    >>> round(profile_eval(profile, 0.5), 12)
    0.5
    >>> profile_eval(profile, 2.0)
    Traceback (most recent call last):
        ...
    gflab.domain.utils.errors.OutOfDomainError: profile[affine]: the profile is only defined on [0, 1]

    """
    return float(profile_values(profile, np.array([t]))[0])


def profile_exponents(profile: HurstProfile, t0: float) -> HolderExponents:
    """Return the local exponent and sub-exponent of `profile` at `t0`.

    A marked point wins over the analytic values of the kind. For the built-in kinds:

    - a constant profile gives ``(∞, ∞)``
    - a non constant affine profile gives ``(1, 1)``
    - a power cusp gives ``(min(γ, 1), ∞)`` at its cusp, ``(1, 1)`` elsewhere
    - a smooth periodic profile gives ``(1, ∞)`` at its critical points, ``(1, 1)`` elsewhere
    - a user table is only known at its marked points

    Raises
    ------
    OutOfDomainError
        If `t0` is outside the domain of the profile.

    Examples
    --------
    >>> profile_exponents(constant_profile(0.5), 0.3)
    HolderExponents(local_exponent=inf, sub_exponent=inf)
    >>> profile_exponents(affine_profile(0.3, 0.4), 0.5)
    HolderExponents(local_exponent=1.0, sub_exponent=1.0)
    >>> profile_exponents(user_table_profile([(0, 0.3), (1, 0.6)]), 0.5).known
    False

    """
    _check_in_domain(profile, np.array([t0], dtype=float))
    marked = profile.marked(t0)
    if marked is not None:
        return HolderExponents(
            local_exponent=marked.local_exponent, sub_exponent=marked.sub_exponent
        )
    params = profile.params
    smooth = HolderExponents(local_exponent=1.0, sub_exponent=1.0)
    flat = HolderExponents(local_exponent=math.inf, sub_exponent=math.inf)
    if profile.kind is ProfileKind.CONSTANT:
        return flat
    if profile.kind is ProfileKind.AFFINE:
        return flat if params[1] == 0 else smooth
    if profile.kind is ProfileKind.POWER_CUSP:
        coef, gamma, cusp = params[1:]
        if coef == 0:
            return flat
        if abs(t0 - cusp) <= 1e-12 * max(1.0, abs(cusp)):
            return HolderExponents(local_exponent=min(gamma, 1.0), sub_exponent=math.inf)
        return smooth
    if profile.kind is ProfileKind.SMOOTH_PERIODIC:
        amplitude, period, phase = params[1:]
        if amplitude == 0:
            return flat
        if abs(math.cos(2 * math.pi * t0 / period + phase)) <= 1e-12:
            return HolderExponents(local_exponent=1.0, sub_exponent=math.inf)
        return smooth
    return HolderExponents.unknown()


def profile_satisfies_h_beta(profile: HurstProfile) -> bool:
    """Tell if ``sup H < β`` over the domain, for the declared Hölder regularity ``β`` of `profile`.

    Examples
    --------
    >>> profile_satisfies_h_beta(affine_profile(0.3, 0.4))
    True
    >>> profile_satisfies_h_beta(power_cusp_profile(0.45, 1.0, 0.3, 0.5, domain=(0.45, 0.55)))
    False

    """
    return profile.bounds()[1] < profile.declared_beta
