"""Dimensions of graphs and ranges predicted from the local exponents of a field.

For a field indexed by ``R^N`` with values in ``R^d``, local exponent ``α̃`` and sub-exponent
``α̲`` at ``t₀``, the dimensions of the graph and of the range of the field restricted to the
shrinking balls around ``t₀`` lie in the intervals given by :obj:`predicted_bounds`. The same
bounds hold on a whole interval with the infimum of the exponents over it.

"""
import enum
import logging
import math
from typing import Dict, Optional, Tuple

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.entities import HurstProfile
from gflab.domain.contexts.kernels.profiles import (
    profile_eval,
    profile_exponents,
    profile_satisfies_h_beta,
)
from gflab.domain.utils.entity import validate_positive_integer, validate_positive_real

from ..entities import ProcessConfig, ProcessKind


logger = logging.getLogger(__name__)

Bounds = Tuple[float, float]


def predicted_bounds(
    alpha_tilde: float, alpha_under: float, n_dim: int, d: int
) -> Dict[str, Bounds]:
    """Return the intervals the dimensions of the graph and of the range must lie in.

    - graph: from ``N/α̲`` if ``N ≤ d·α̲``, else ``N + d(1 - α̲)``, up to
      ``min(N/α̃, N + d(1 - α̃))``
    - range: from ``N/α̲`` if ``N ≤ d·α̲``, else ``d``, up to ``min(N/α̃, d)``

    Parameters
    ----------
    alpha_tilde : float
        The local exponent ``α̃``.
    alpha_under : float
        The local sub-exponent ``α̲``, at least ``α̃``, maybe ``inf``.
    n_dim : int
        The dimension ``N`` of the index space.
    d : int
        The dimension of the values.

    Returns
    -------
    Dict[str, Tuple[float, float]]
        The ``(low, high)`` intervals of the ``graph`` and of the ``range``.

    Raises
    ------
    ValueError
        If ``α̃`` is not positive or is larger than ``α̲``.

    Examples
    --------
    >>> predicted_bounds(0.5, 0.5, 1, 1)
    {'graph': (1.5, 1.5), 'range': (1.0, 1.0)}
    >>> predicted_bounds(0.4, 0.4, 2, 1)["graph"]
    (2.6, 2.6)
    >>> predicted_bounds(0.5, 0.5, 1, 3)
    {'graph': (2.0, 2.0), 'range': (2.0, 2.0)}
    >>> [round(bound, 12) for bound in predicted_bounds(0.3, 0.6, 1, 1)["graph"]]
    [1.4, 1.7]
    >>> predicted_bounds(0.6, 0.3, 1, 1)
    Traceback (most recent call last):
        ...
    ValueError: alpha_tilde must be at most alpha_under

    """
    validate_positive_real(alpha_tilde, False, "alpha_tilde")
    if math.isnan(alpha_under) or alpha_under < alpha_tilde:
        raise ValueError("alpha_tilde must be at most alpha_under")
    validate_positive_integer(n_dim, False, "N")
    validate_positive_integer(d, False, "d")
    graph_high = min(n_dim / alpha_tilde, n_dim + d * (1 - alpha_tilde))
    range_high = min(n_dim / alpha_tilde, float(d))
    if n_dim <= d * alpha_under:
        graph_low = range_low = n_dim / alpha_under
    else:
        graph_low = n_dim + d * (1 - alpha_under)
        range_low = float(d)
    return {
        "graph": (float(graph_low), float(graph_high)),
        "range": (float(range_low), float(range_high)),
    }


class MbmCase(enum.Enum):
    """How the regularity of the profile of an mBm compares with ``H(t₀)``.

    - ``smooth``: ``H(t₀) < α̃_H(t₀)``, the field has exponents ``(H(t₀), H(t₀))``
    - ``rough profile``: ``α̃_H(t₀) < H(t₀) ≤ α̲_H(t₀)``, exponents ``(α̃_H(t₀), H(t₀))``
    - ``rougher profile``: ``α̲_H(t₀) < H(t₀)``, exponents ``(α̃_H(t₀), α̲_H(t₀))``

    """

    SMOOTH = "smooth"
    ROUGH_PROFILE = "rough profile"
    ROUGHER_PROFILE = "rougher profile"


def mbm_case(profile: HurstProfile, t0: float) -> Optional[MbmCase]:
    """Return the case of the multifractional Brownian motion of `profile` at `t0`.

    The exponents of the profile are its declared ones. ``None`` is returned when they are not
    known at `t0`, or when ``H(t₀)`` equals the exponent of the profile.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import affine_profile, power_cusp_profile
    >>> mbm_case(affine_profile(0.3, 0.4), 0.5)
    <MbmCase.SMOOTH: 'smooth'>
    >>> cusp = power_cusp_profile(0.45, 1.0, 0.3, 0.5, domain=(0.45, 0.55))
    >>> mbm_case(cusp, 0.5)
    <MbmCase.ROUGH_PROFILE: 'rough profile'>

    """
    exponents = profile_exponents(profile, t0)
    if not exponents.known:
        return None
    hurst = profile_eval(profile, t0)
    if hurst < exponents.local_exponent:
        return MbmCase.SMOOTH
    if exponents.local_exponent < hurst <= exponents.sub_exponent:
        return MbmCase.ROUGH_PROFILE
    if exponents.sub_exponent < hurst:
        return MbmCase.ROUGHER_PROFILE
    return None


def mbm_predicted_exponents(profile: HurstProfile, t0: float) -> Optional[Tuple[float, float]]:
    """Return the exponents ``(min(H(t₀), α̃_H(t₀)), min(H(t₀), α̲_H(t₀)))`` of the mBm.

    ``None`` when :obj:`mbm_case` cannot tell the case.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import power_cusp_profile
    >>> cusp = power_cusp_profile(0.45, 1.0, 0.3, 0.5, domain=(0.45, 0.55))
    >>> mbm_predicted_exponents(cusp, 0.5)
    (0.3, 0.45)

    """
    if mbm_case(profile, t0) is None:
        return None
    exponents = profile_exponents(profile, t0)
    hurst = profile_eval(profile, t0)
    return (min(hurst, exponents.local_exponent), min(hurst, exponents.sub_exponent))


def expected_exponents(process: ProcessConfig, t0: Point) -> Optional[Tuple[float, float]]:
    """Return the exponents ``(α̃, α̲)`` the kernel of `process` is known to have at `t0`.

    - fBm and MpfBm: ``(H, H)``
    - generalized Weierstrass function: ``(H(t₀), H(t₀))`` when the profile satisfies the
      ``(H_β)`` assumption
    - mBm: :obj:`mbm_predicted_exponents`

    ``None`` when they are not known.

    """
    if process.kind in (ProcessKind.FBM, ProcessKind.MPFBM):
        return (process.params["H"], process.params["H"])
    assert process.profile is not None
    t = t0.coords[0]
    if process.kind is ProcessKind.GW:
        if not profile_satisfies_h_beta(process.profile):
            logger.info("The profile does not satisfy (H_beta): no expected exponents")
            return None
        hurst = profile_eval(process.profile, t)
        return (hurst, hurst)
    return mbm_predicted_exponents(process.profile, t)
