"""Package defining the :obj:`HurstProfile` entity and its companions."""

import enum
import math
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    to_float,
    to_float_tuple,
    validate_nonnegative_real,
    validate_positive_extended_real,
    validated,
)
from gflab.domain.utils.errors import DimensionMismatchError


#: Number of points of the domain where the range of a profile is checked.
RANGE_CHECK_POINTS = 4097


class ProfileKind(enum.Enum):
    """All the available kinds of Hurst profile.

    The parameters of each kind are:

    - ``constant``: ``[c]``, ``H(t) = c``
    - ``affine``: ``[a, b]``, ``H(t) = a + b·t``
    - ``power_cusp``: ``[c, coef, γ, t_c]``, ``H(t) = c + coef·|t - t_c|^γ``
    - ``smooth_periodic``: ``[c, amp, period, phase]``, ``H(t) = c + amp·sin(2πt/period + phase)``
    - ``user_table``: ``[t₀, H₀, t₁, H₁, ...]``, piecewise linear interpolation of the knots

    """

    CONSTANT = "constant"
    AFFINE = "affine"
    POWER_CUSP = "power_cusp"
    SMOOTH_PERIODIC = "smooth_periodic"
    USER_TABLE = "user_table"


def _constant(params: Tuple[float, ...], t: np.ndarray) -> np.ndarray:
    return np.full_like(t, params[0])


def _affine(params: Tuple[float, ...], t: np.ndarray) -> np.ndarray:
    intercept, slope = params
    return intercept + slope * t


def _power_cusp(params: Tuple[float, ...], t: np.ndarray) -> np.ndarray:
    base, coef, gamma, cusp = params
    return base + coef * np.abs(t - cusp) ** gamma


def _smooth_periodic(params: Tuple[float, ...], t: np.ndarray) -> np.ndarray:
    base, amplitude, period, phase = params
    return base + amplitude * np.sin(2 * np.pi * t / period + phase)


def _user_table(params: Tuple[float, ...], t: np.ndarray) -> np.ndarray:
    knots = np.asarray(params).reshape(-1, 2)
    return np.interp(t, knots[:, 0], knots[:, 1])


_FORMULAS: Dict[ProfileKind, Callable[[Tuple[float, ...], np.ndarray], np.ndarray]] = {
    ProfileKind.CONSTANT: _constant,
    ProfileKind.AFFINE: _affine,
    ProfileKind.POWER_CUSP: _power_cusp,
    ProfileKind.SMOOTH_PERIODIC: _smooth_periodic,
    ProfileKind.USER_TABLE: _user_table,
}

_PARAMS_COUNTS: Dict[ProfileKind, int] = {
    ProfileKind.CONSTANT: 1,
    ProfileKind.AFFINE: 2,
    ProfileKind.POWER_CUSP: 4,
    ProfileKind.SMOOTH_PERIODIC: 4,
}


@validated()
class MarkedPoint(BaseEntity):
    """A point where the regularity of a profile is declared.

    Attributes
    ----------
    t0 : float
        The position of the point.
    local_exponent : float
        The declared local Hölder exponent of the profile at `t0`, ``math.inf`` allowed.
    sub_exponent : float
        The declared local sub-exponent of the profile at `t0`, ``math.inf`` allowed. Never below
        `local_exponent`.

    Examples
    --------
    >>> MarkedPoint(t0=0.5, local_exponent=0.5, sub_exponent=math.inf).sub_exponent
    inf
    >>> MarkedPoint(t0=0.5, local_exponent=1.0, sub_exponent=0.5)
    Traceback (most recent call last):
        ...
    ValueError: MarkedPoint.sub_exponent must be greater than or equal to MarkedPoint.local_exponent

    """

    t0: float = required_field((int, float), converter=to_float)
    local_exponent: float = required_field((int, float), converter=to_float)
    sub_exponent: float = required_field((int, float), converter=to_float)

    @field_validator(t0)
    def validate_t0(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`MarkedPoint.t0` field is a nonnegative real."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.t0",
        )

    @field_validator(local_exponent)
    def validate_local_exponent(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`MarkedPoint.local_exponent` field is a positive extended real."""
        validate_positive_extended_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.local_exponent",
        )

    @field_validator(sub_exponent)
    def validate_sub_exponent(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`MarkedPoint.sub_exponent` field is not below the local exponent.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        ValueError
            If the sub-exponent is not a positive extended real or is below the local exponent.

        """
        name = self.__class__.__name__
        validate_positive_extended_real(
            value=value, none_allowed=False, display_name=f"{name}.sub_exponent"
        )
        if isinstance(self.local_exponent, float) and value < self.local_exponent:
            raise ValueError(
                f"{name}.sub_exponent must be greater than or equal to {name}.local_exponent"
            )


@validated()
class HolderExponents(BaseEntity):
    """The local Hölder exponent and sub-exponent of a profile at a point, when known.

    ``None`` means "unknown": no analytic value is declared for the point.

    Attributes
    ----------
    local_exponent : Optional[float]
        The local Hölder exponent.
    sub_exponent : Optional[float]
        The local sub-exponent.

    """

    local_exponent: Optional[float] = optional_field((int, float), converter=to_float)
    sub_exponent: Optional[float] = optional_field((int, float), converter=to_float)

    @field_validator(local_exponent)
    def validate_local_exponent(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`HolderExponents.local_exponent` field is positive or ``None``."""
        validate_positive_extended_real(
            value=value,
            none_allowed=True,
            display_name=f"{self.__class__.__name__}.local_exponent",
        )

    @field_validator(sub_exponent)
    def validate_sub_exponent(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`HolderExponents.sub_exponent` field is positive or ``None``."""
        validate_positive_extended_real(
            value=value,
            none_allowed=True,
            display_name=f"{self.__class__.__name__}.sub_exponent",
        )

    @property
    def known(self) -> bool:
        """Tell if both exponents are known."""
        return self.local_exponent is not None and self.sub_exponent is not None

    @classmethod
    def unknown(cls) -> "HolderExponents":
        """Return exponents for a point without any declared value."""
        return cls()


@validated()
class HurstProfile(BaseEntity):
    """A Hurst profile ``H`` with values in ``(0, 1)`` over a bounded domain of ``R₊``.

    Attributes
    ----------
    kind : ProfileKind
        The kind of profile, giving the meaning of `params`.
    params : Tuple[float, ...]
        The parameters of the profile, see :obj:`ProfileKind`.
    domain : Box
        The 1-dimensional interval where the profile is defined.
    declared_beta : float
        The declared Hölder regularity of the profile, ``math.inf`` when unbounded.
    marked_points : Tuple[MarkedPoint, ...]
        Points where the regularity of the profile is declared.

    Examples
    --------
    >>> profile = HurstProfile(
    ...     kind=ProfileKind.AFFINE, params=[0.3, 0.4], domain=Box.of([0], [1])
    ... )
    >>> profile.values(np.array([0.0, 0.5])).tolist()
    [0.3, 0.5]
    >>> HurstProfile(kind=ProfileKind.AFFINE, params=[0.3, 1.0], domain=Box.of([0], [1]))
    Traceback (most recent call last):
        ...
    ValueError: HurstProfile values must lie in (0, 1) over the domain

    """

    kind: ProfileKind = required_field(ProfileKind)
    params: Tuple[float, ...] = required_field(tuple, converter=to_float_tuple)
    domain: Box = required_field(Box)
    declared_beta: float = required_field(
        (int, float), converter=to_float, default=math.inf
    )
    marked_points: Tuple[MarkedPoint, ...] = required_field(
        tuple, converter=tuple, default=()
    )

    @field_validator(params)
    def validate_params(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate the number and values of the :obj:`HurstProfile.params` for its kind.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        TypeError
            If a parameter is not a real number.
        ValueError
            If the number of parameters does not match the kind, or a parameter is invalid.

        """
        name = f"{self.__class__.__name__}.params"
        for param in value:
            if isinstance(param, bool) or not isinstance(param, (int, float)):
                raise TypeError(f"{name} must be real numbers")
            if not math.isfinite(param):
                raise ValueError(f"{name} must be finite")
        if not isinstance(self.kind, ProfileKind):
            return
        if self.kind is ProfileKind.USER_TABLE:
            if len(value) < 4 or len(value) % 2:
                raise ValueError(f"{name} must be at least two (t, H) knots for a user_table")
            if np.any(np.diff(value[::2]) <= 0):
                raise ValueError(f"{name} knots must be strictly increasing for a user_table")
            return
        expected = _PARAMS_COUNTS[self.kind]
        if len(value) != expected:
            raise ValueError(
                f"{name} must have {expected} values for a {self.kind.value} profile"
            )
        if self.kind is ProfileKind.POWER_CUSP and value[2] <= 0:
            raise ValueError(f"{name} exponent of a power_cusp must be positive")
        if self.kind is ProfileKind.SMOOTH_PERIODIC and value[2] <= 0:
            raise ValueError(f"{name} period of a smooth_periodic must be positive")

    @field_validator(domain)
    def validate_domain(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate the domain and that the profile takes its values in ``(0, 1)`` over it.

        The range is checked on a dense uniform sampling of the domain.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        DimensionMismatchError
            If the domain is not an interval.
        ValueError
            If the profile leaves ``(0, 1)``, or a user table does not cover the domain.

        """
        name = self.__class__.__name__
        if value.dimension != 1:
            raise DimensionMismatchError(f"{name}.domain must be an interval")
        if not isinstance(self.kind, ProfileKind) or not isinstance(self.params, tuple):
            return
        if self.kind is ProfileKind.USER_TABLE:
            lower, upper = value.lower.coords[0], value.upper.coords[0]
            if self.params[0] > lower or self.params[-2] < upper:
                raise ValueError(f"{name} user_table knots must cover the domain")
        low, high = self.bounds()
        if not (low > 0 and high < 1):
            raise ValueError(f"{name} values must lie in (0, 1) over the domain")

    @field_validator(declared_beta)
    def validate_declared_beta(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`HurstProfile.declared_beta` field is positive, maybe infinite."""
        validate_positive_extended_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.declared_beta",
        )

    @field_validator(marked_points)
    def validate_marked_points(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the marked points are :obj:`MarkedPoint` inside the domain.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        TypeError
            If an item is not a :obj:`MarkedPoint`.
        ValueError
            If a marked point is outside the domain.

        """
        name = self.__class__.__name__
        for marked in value:
            if not isinstance(marked, MarkedPoint):
                raise TypeError(f"{name}.marked_points must be MarkedPoint instances")
            if isinstance(self.domain, Box) and not (
                self.domain.lower.coords[0] <= marked.t0 <= self.domain.upper.coords[0]
            ):
                raise ValueError(f"{name}.marked_points must be inside the domain")

    def values(self, t: Any) -> np.ndarray:
        """Evaluate the profile formula at `t`, without checking the domain."""
        return _FORMULAS[self.kind](self.params, np.asarray(t, dtype=float))

    def bounds(self) -> Tuple[float, float]:
        """Return the ``(inf, sup)`` of the profile over a dense sampling of its domain."""
        grid = np.linspace(
            self.domain.lower.coords[0], self.domain.upper.coords[0], RANGE_CHECK_POINTS
        )
        if self.kind is ProfileKind.POWER_CUSP:
            grid = np.append(grid, np.clip(self.params[3], grid[0], grid[-1]))
        values = self.values(grid)
        return float(values.min()), float(values.max())

    def marked(self, t0: float, tolerance: float = 1e-12) -> Optional[MarkedPoint]:
        """Return the marked point at `t0`, if any."""
        for marked in self.marked_points:
            if abs(marked.t0 - t0) <= tolerance * max(1.0, abs(t0)):
                return marked
        return None
