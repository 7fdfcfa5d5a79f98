"""Package defining the :obj:`Box` entity."""

from typing import Any

import numpy as np

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    validated,
)
from gflab.domain.utils.errors import DimensionMismatchError

from ..point import Point


@validated()
class Box(BaseEntity):
    """A closed axis-aligned box ``[lower, upper]`` of the nonnegative orthant.

    Attributes
    ----------
    lower : Point
        The lower corner.
    upper : Point
        The upper corner, greater than or equal to `lower` on every axis.

    Examples
    --------
    >>> box = Box.of((1, 1), (2, 3))
    >>> box.lengths.tolist()
    [1.0, 2.0]
    >>> box.contains(Point.of(1.5, 3))
    True
    >>> Box.of((1, 1), (0, 3))
    Traceback (most recent call last):
        ...
    ValueError: Box.upper must be greater than or equal to Box.lower on every axis

    """

    lower: Point = required_field(Point)
    upper: Point = required_field(Point)

    @field_validator(upper)
    def validate_corners(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that both corners have the same dimension and are ordered.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        DimensionMismatchError
            If the corners do not have the same dimension.
        ValueError
            If `lower` is above `upper` on some axis.

        """
        if not isinstance(self.lower, Point):
            return
        if value.dimension != self.lower.dimension:
            raise DimensionMismatchError(
                f"{self.__class__.__name__} corners must have the same dimension"
            )
        if any(low > high for low, high in zip(self.lower.coords, value.coords)):
            raise ValueError(
                f"{self.__class__.__name__}.upper must be greater than or equal to "
                f"{self.__class__.__name__}.lower on every axis"
            )

    @classmethod
    def of(cls, lower: Any, upper: Any) -> "Box":
        """Create a box from two sequences of coordinates."""
        return cls(lower=Point(coords=lower), upper=Point(coords=upper))

    @property
    def dimension(self) -> int:
        """Return the dimension of the index space."""
        return self.lower.dimension

    @property
    def lengths(self) -> np.ndarray:
        """Return the side lengths of the box."""
        return self.upper.as_array() - self.lower.as_array()

    def contains(self, point: Point) -> bool:
        """Tell if the given `point` lies in the (closed) box."""
        coords = point.as_array()
        return bool(
            np.all(coords >= self.lower.as_array())
            and np.all(coords <= self.upper.as_array())
        )
