"""Package defining the :obj:`WindowPolicy` entity."""

from typing import Any

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    to_float,
    validate_positive_integer,
    validate_real_in_range,
    validated,
)


@validated()
class WindowPolicy(BaseEntity):
    """The rules selecting the scales kept in a box-counting regression.

    A scale is kept when its count is at least `min_count`, is at most a `saturation` fraction
    of the number of points, and, for column counting, when a column spans at least
    `min_column_samples` grid steps. The grid is then thinned so that each column spans exactly
    that many steps. The regression uses the longest run of consecutive kept scales.

    Attributes
    ----------
    min_count : int
        The least count of a kept scale, ``8`` by default.
    saturation : float
        The largest count of a kept scale, as a fraction of the number of points, ``0.25`` by
        default. Not used by column counting.
    min_scales : int
        The least number of scales in the regression, ``3`` by default.
    min_column_samples : int
        The number of grid steps spanned by a column of the thinned grid, ``2`` by default.

    Examples
    --------
    >>> WindowPolicy().min_count
    8
    >>> WindowPolicy(saturation=1.5)
    Traceback (most recent call last):
        ...
    ValueError: WindowPolicy.saturation must be in (0, 1]

    """

    min_count: int = required_field(int, frozen=True, default=8)
    saturation: float = required_field(
        (int, float), frozen=True, converter=to_float, default=0.25
    )
    min_scales: int = required_field(int, frozen=True, default=3)
    min_column_samples: int = required_field(int, frozen=True, default=2)

    @field_validator(min_count)
    def validate_min_count(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`WindowPolicy.min_count` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.min_count",
        )

    @field_validator(saturation)
    def validate_saturation(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`WindowPolicy.saturation` field is in ``(0, 1]``."""
        validate_real_in_range(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.saturation",
            low=0.0,
            high=1.0,
            low_inclusive=False,
            high_inclusive=True,
        )

    @field_validator(min_scales)
    def validate_min_scales(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`WindowPolicy.min_scales` field is an integer of at least 2."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.min_scales",
        )
        if value < 2:
            raise ValueError(f"{self.__class__.__name__}.min_scales must be at least 2")

    @field_validator(min_column_samples)
    def validate_min_column_samples(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`WindowPolicy.min_column_samples` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.min_column_samples",
        )
