"""Package defining the :obj:`ExponentEstimate` entity."""

import math
from typing import Any, Dict, Tuple

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    to_float,
    to_float_tuple,
    validate_positive_integer,
    validate_positive_real,
    validated,
)


#: Slack allowed on ``α̃ ≤ α̲`` for rounding errors.
ORDERING_TOLERANCE = 1e-6


def encode_real(value: float) -> Any:
    """Return `value`, or ``"inf"`` for an infinite value, as JSON has no infinity."""
    return "inf" if value == math.inf else value


@validated()
class ExponentEstimate(BaseEntity):
    """The estimated deterministic local exponent and sub-exponent of a kernel at a point.

    For each radius ``ρ`` of the ladder, the ratios ``r(s, t) = log σ²(s, t) / (2·log d₂(s, t))``
    are computed over pairs sampled in ``B(t₀, ρ)``. When ``ρ → 0``, their infimum increases to
    ``α̃`` and their supremum decreases to ``α̲``: the estimates are the values at the last radius.

    Attributes
    ----------
    t0 : Point
        The point of the estimate.
    rho_ladder : Tuple[float, ...]
        The strictly decreasing radii of the balls.
    inf_ratio : Tuple[float, ...]
        The smallest ratio at each radius.
    sup_ratio : Tuple[float, ...]
        The largest ratio at each radius, ``inf`` when above the cap.
    alpha_tilde_hat : float
        The estimate of the local exponent ``α̃``.
    alpha_under_hat : float
        The estimate of the local sub-exponent ``α̲``, maybe ``inf``.
    pair_count : int
        The number of pairs sampled at each radius.
    diagnostics : Dict[str, Any]
        Excluded pairs, last-step changes and monotonicity of the ratios along the ladder.

    Examples
    --------
    >>> estimate = ExponentEstimate(
    ...     t0=Point.of(0.5),
    ...     rho_ladder=[0.25, 0.125],
    ...     inf_ratio=[0.29, 0.3],
    ...     sup_ratio=[0.51, 0.5],
    ...     alpha_tilde_hat=0.3,
    ...     alpha_under_hat=0.5,
    ...     pair_count=100,
    ...     diagnostics={},
    ... )
    >>> estimate.to_dict()["rho_ladder"]
    [0.25, 0.125]
    >>> ExponentEstimate(
    ...     t0=Point.of(0.5),
    ...     rho_ladder=[0.25],
    ...     inf_ratio=[0.5],
    ...     sup_ratio=[0.3],
    ...     alpha_tilde_hat=0.5,
    ...     alpha_under_hat=0.3,
    ...     pair_count=100,
    ...     diagnostics={},
    ... )
    Traceback (most recent call last):
        ...
    ValueError: ExponentEstimate.sup_ratio must not be below inf_ratio

    """

    t0: Point = required_field(Point, frozen=True)
    rho_ladder: Tuple[float, ...] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    inf_ratio: Tuple[float, ...] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    sup_ratio: Tuple[float, ...] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    alpha_tilde_hat: float = required_field((int, float), frozen=True, converter=to_float)
    alpha_under_hat: float = required_field((int, float), frozen=True, converter=to_float)
    pair_count: int = required_field(int, frozen=True)
    diagnostics: Dict[str, Any] = required_field(dict, frozen=True)

    @field_validator(rho_ladder)
    def validate_rho_ladder(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExponentEstimate.rho_ladder` is strictly decreasing and positive."""
        if not value:
            raise ValueError(f"{self.__class__.__name__}.rho_ladder must not be empty")
        for rho in value:
            validate_positive_real(
                value=rho,
                none_allowed=False,
                display_name=f"{self.__class__.__name__}.rho_ladder",
            )
        if any(later >= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError(
                f"{self.__class__.__name__}.rho_ladder must be strictly decreasing"
            )

    @field_validator(inf_ratio)
    def validate_inf_ratio(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there is one finite :obj:`ExponentEstimate.inf_ratio` per radius."""
        if len(value) != len(self.rho_ladder):
            raise ValueError(
                f"{self.__class__.__name__}.inf_ratio must have one value per radius"
            )
        if not all(isinstance(ratio, float) and math.isfinite(ratio) for ratio in value):
            raise ValueError(f"{self.__class__.__name__}.inf_ratio must be finite reals")

    @field_validator(sup_ratio)
    def validate_sup_ratio(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`ExponentEstimate.sup_ratio` is never below the infimum."""
        if len(value) != len(self.rho_ladder):
            raise ValueError(
                f"{self.__class__.__name__}.sup_ratio must have one value per radius"
            )
        if any(not isinstance(ratio, float) or math.isnan(ratio) for ratio in value):
            raise ValueError(f"{self.__class__.__name__}.sup_ratio must be reals")
        if any(high < low for low, high in zip(self.inf_ratio, value)):
            raise ValueError(
                f"{self.__class__.__name__}.sup_ratio must not be below inf_ratio"
            )

    @field_validator(alpha_under_hat)
    def validate_alpha_under_hat(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate the ordering ``alpha_tilde_hat ≤ alpha_under_hat``."""
        if math.isnan(value) or math.isnan(self.alpha_tilde_hat):
            raise ValueError(f"{self.__class__.__name__}.alpha_under_hat must be a real")
        if self.alpha_tilde_hat > value + ORDERING_TOLERANCE:
            raise ValueError(
                f"{self.__class__.__name__}.alpha_under_hat must not be below alpha_tilde_hat"
            )

    @field_validator(pair_count)
    def validate_pair_count(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExponentEstimate.pair_count` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.pair_count",
        )

    @property
    def rho(self) -> float:
        """Return the last, smallest, radius of the ladder."""
        return self.rho_ladder[-1]

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document, infinite values written as ``"inf"``."""
        return {
            "t0": list(self.t0.coords),
            "rho_ladder": list(self.rho_ladder),
            "inf_ratio": list(self.inf_ratio),
            "sup_ratio": [encode_real(ratio) for ratio in self.sup_ratio],
            "alpha_tilde_hat": self.alpha_tilde_hat,
            "alpha_under_hat": encode_real(self.alpha_under_hat),
            "pair_count": self.pair_count,
            "diagnostics": self.diagnostics,
        }
