"""Package defining the :obj:`DimensionEstimate` entity."""

import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    to_float,
    to_float_tuple,
    validate_nonnegative_real,
    validate_positive_integer,
    validate_positive_real,
    validated,
)

from ..cloud import DimensionTarget


def _to_int_tuple(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(int(item) if isinstance(item, np.integer) else item for item in value)
    return value


@validated()
class DimensionEstimate(BaseEntity):
    """A box-counting dimension: the slope of ``log N_δ`` against ``log(1/δ)``.

    Attributes
    ----------
    target : Optional[DimensionTarget]
        The set of a sample path that was measured, if any.
    ambient_dim : int
        The dimension of the space the measured set lives in.
    scales : Tuple[float, ...]
        The strictly decreasing sides ``δ`` of the boxes.
    counts : Tuple[int, ...]
        The number ``N_δ`` of boxes at each scale.
    window : Tuple[int, int]
        The range ``[start, stop)`` of the scales used by the regression.
    slope : float
        The estimated dimension, in ``[0, ambient_dim]``.
    stderr : float
        The standard error of the slope.
    r2 : float
        The coefficient of determination of the regression.

    Examples
    --------
    >>> estimate = DimensionEstimate(
    ...     target=DimensionTarget.GRAPH,
    ...     ambient_dim=2,
    ...     scales=[0.5, 0.25, 0.125],
    ...     counts=[2, 4, 8],
    ...     window=(0, 3),
    ...     slope=1.0,
    ...     stderr=0.0,
    ...     r2=1.0,
    ... )
    >>> estimate.window_scales
    (0.5, 0.25, 0.125)
    >>> estimate.to_dict()["target"]
    'graph'

    """

    target: Optional[DimensionTarget] = optional_field(DimensionTarget, frozen=True)
    ambient_dim: int = required_field(int, frozen=True)
    scales: Tuple[float, ...] = required_field(tuple, frozen=True, converter=to_float_tuple)
    counts: Tuple[int, ...] = required_field(tuple, frozen=True, converter=_to_int_tuple)
    window: Tuple[int, int] = required_field(tuple, frozen=True, converter=_to_int_tuple)
    slope: float = required_field((int, float), frozen=True, converter=to_float)
    stderr: float = required_field((int, float), frozen=True, converter=to_float)
    r2: float = required_field((int, float), frozen=True, converter=to_float)

    @field_validator(ambient_dim)
    def validate_ambient_dim(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.ambient_dim` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.ambient_dim",
        )

    @field_validator(scales)
    def validate_scales(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.scales` are strictly decreasing and positive."""
        name = f"{self.__class__.__name__}.scales"
        if not value:
            raise ValueError(f"{name} must not be empty")
        for scale in value:
            validate_positive_real(value=scale, none_allowed=False, display_name=name)
        if any(later >= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError(f"{name} must be strictly decreasing")

    @field_validator(counts)
    def validate_counts(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there is one positive :obj:`DimensionEstimate.counts` per scale."""
        name = f"{self.__class__.__name__}.counts"
        if len(value) != len(self.scales):
            raise ValueError(f"{name} must have one value per scale")
        for count in value:
            validate_positive_integer(value=count, none_allowed=False, display_name=name)

    @field_validator(window)
    def validate_window(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.window` holds two scales or more."""
        if len(value) != 2 or not 0 <= value[0] <= value[1] - 2 or value[1] > len(self.scales):
            raise ValueError(
                f"{self.__class__.__name__}.window must be a range of at least 2 scales"
            )

    @field_validator(slope)
    def validate_slope(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.slope` is in ``[0, ambient_dim]``."""
        if math.isnan(value) or not 0 <= value <= self.ambient_dim:
            raise ValueError(
                f"{self.__class__.__name__}.slope must be a real in [0, {self.ambient_dim}]"
            )

    @field_validator(stderr)
    def validate_stderr(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.stderr` field is a nonnegative real."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.stderr",
        )

    @field_validator(r2)
    def validate_r2(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`DimensionEstimate.r2` field is in ``[0, 1]``."""
        if math.isnan(value) or not 0 <= value <= 1 + 1e-12:
            raise ValueError(f"{self.__class__.__name__}.r2 must be a real in [0, 1]")

    @property
    def window_scales(self) -> Tuple[float, ...]:
        """Return the scales used by the regression."""
        return self.scales[self.window[0] : self.window[1]]

    def rows(self) -> List[Tuple[float, int, bool]]:
        """Return the ``(scale, count, in window)`` table, for plots."""
        start, stop = self.window
        return [
            (scale, count, start <= index < stop)
            for index, (scale, count) in enumerate(zip(self.scales, self.counts))
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the estimate."""
        return {
            "target": self.target.value if self.target else None,
            "ambient_dim": self.ambient_dim,
            "scales": list(self.scales),
            "counts": list(self.counts),
            "window": list(self.window),
            "slope": self.slope,
            "stderr": self.stderr,
            "r2": self.r2,
        }
