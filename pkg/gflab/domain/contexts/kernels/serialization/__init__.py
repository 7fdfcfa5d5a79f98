"""JSON-compatible documents for profiles and kernels.

Infinite reals are written as the string ``"inf"``, as JSON has no infinity.

A profile document looks like::

    {
        "kind": "power_cusp",
        "params": [0.45, 1.0, 0.3, 0.5],
        "domain": [0.45, 0.55],
        "declared_beta": 0.3,
        "marked_points": [{"t0": 0.5, "local_exponent": 0.3, "sub_exponent": "inf"}]
    }

and a kernel document::

    {"family": "gw", "dimension": 1, "params": {"lambda": 2.0, "J": 42}, "profile": {...}}

"""
import math
from typing import Any, Dict, Optional

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.utils.errors import ConfigError

from ..entities import HurstProfile, IncrementKernel, MarkedPoint, ProfileKind
from ..families import build_kernel


def _encode_real(value: float) -> Any:
    return "inf" if value == math.inf else value


def _decode_real(value: Any) -> float:
    if value == "inf":
        return math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{value!r} is not a real number")
    return float(value)


def profile_to_dict(profile: HurstProfile) -> Dict[str, Any]:
    """Return the JSON-compatible document describing `profile`.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.profiles import constant_profile
    >>> profile_to_dict(constant_profile(0.5))
    {'kind': 'constant', 'params': [0.5], 'domain': [0.0, 1.0], 'declared_beta': 'inf', 'marked_points': []}

    """
    return {
        "kind": profile.kind.value,
        "params": list(profile.params),
        "domain": [profile.domain.lower.coords[0], profile.domain.upper.coords[0]],
        "declared_beta": _encode_real(profile.declared_beta),
        "marked_points": [
            {
                "t0": marked.t0,
                "local_exponent": _encode_real(marked.local_exponent),
                "sub_exponent": _encode_real(marked.sub_exponent),
            }
            for marked in profile.marked_points
        ],
    }


def profile_from_dict(document: Dict[str, Any]) -> HurstProfile:
    """Create the profile described by `document`.

    Raises
    ------
    ConfigError
        If the document is malformed or describes an invalid profile.

    """
    try:
        lower, upper = document["domain"]
        return HurstProfile(
            kind=ProfileKind(document["kind"]),
            params=list(document["params"]),
            domain=Box.of([lower], [upper]),
            declared_beta=_decode_real(document.get("declared_beta", "inf")),
            marked_points=[
                MarkedPoint(
                    t0=marked["t0"],
                    local_exponent=_decode_real(marked["local_exponent"]),
                    sub_exponent=_decode_real(marked["sub_exponent"]),
                )
                for marked in document.get("marked_points", [])
            ],
        )
    except KeyError as exception:
        raise ConfigError(f"missing key {exception}", context="profile") from exception
    except (TypeError, ValueError) as exception:
        raise ConfigError(str(exception), context="profile") from exception


def kernel_to_dict(kernel: IncrementKernel) -> Dict[str, Any]:
    """Return the JSON-compatible document describing `kernel`.

    Examples
    --------
    >>> from gflab.domain.contexts.kernels.families import mpfbm_kernel
    >>> kernel_to_dict(mpfbm_kernel(0.4))
    {'family': 'mpfbm', 'dimension': 2, 'params': {'H': 0.4}, 'profile': None}

    """
    profile: Optional[Dict[str, Any]] = None
    if kernel.profile is not None:
        profile = profile_to_dict(kernel.profile)
    return {
        "family": kernel.family.value,
        "dimension": kernel.dimension,
        "params": {name: _encode_real(value) for name, value in kernel.params.items()},
        "profile": profile,
    }


def kernel_from_dict(document: Dict[str, Any]) -> IncrementKernel:
    """Create the kernel described by `document`.

    Derived parameters, like the tail bound of a Weierstrass kernel, are computed again.

    Raises
    ------
    ConfigError
        If the document is malformed or describes an invalid kernel.

    """
    try:
        profile = None
        if document.get("profile") is not None:
            profile = profile_from_dict(document["profile"])
        params = {
            name: _decode_real(value) if value == "inf" else value
            for name, value in document.get("params", {}).items()
        }
        return build_kernel(
            document["family"], params, int(document.get("dimension", 1)), profile
        )
    except KeyError as exception:
        raise ConfigError(f"missing key {exception}", context="kernel") from exception
    except ConfigError:
        raise
    except (TypeError, ValueError) as exception:
        raise ConfigError(str(exception), context="kernel") from exception
