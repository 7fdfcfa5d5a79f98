"""Package defining the :obj:`Point` entity."""

from typing import Any, Tuple

import numpy as np

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    to_float_tuple,
    validate_nonnegative_real,
    validated,
)


@validated()
class Point(BaseEntity):
    """A point of the nonnegative orthant of R^N.

    Points are values: two points with the same coordinates are equal.

    Attributes
    ----------
    coords : Tuple[float, ...]
        The coordinates of the point. At least one, all nonnegative. Cannot be changed.

    Examples
    --------
    >>> Point.of(1, 2)
    Point(coords=(1.0, 2.0))
    >>> Point.of(1, 2).dimension
    2
    >>> Point.of(0.5) == Point(coords=[0.5])
    True
    >>> Point.of(-1)
    Traceback (most recent call last):
        ...
    ValueError: Point.coords must be a nonnegative real

    """

    coords: Tuple[float, ...] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )

    @field_validator(coords)
    def validate_coords(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Point.coords` field holds at least one nonnegative real.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        ValueError
            If there is no coordinate, or a coordinate is negative or not finite.
        TypeError
            If a coordinate is not a real number.

        """
        if not value:
            raise ValueError(f"{self.__class__.__name__}.coords must not be empty")
        for coordinate in value:
            validate_nonnegative_real(
                value=coordinate,
                none_allowed=False,
                display_name=f"{self.__class__.__name__}.coords",
            )

    @classmethod
    def of(cls, *coords: float) -> "Point":
        """Create a point from its coordinates given as positional arguments."""
        return cls(coords=coords)

    @property
    def dimension(self) -> int:
        """Return the number of coordinates of the point."""
        return len(self.coords)

    def as_array(self) -> np.ndarray:
        """Return the coordinates as a 1-D float array."""
        return np.asarray(self.coords, dtype=float)

    def __hash__(self) -> int:
        """Compute the hash of the point from its coordinates."""
        return hash(self.coords)

    def __eq__(self, other: Any) -> bool:
        """Tell if `other` is a point with the same coordinates."""
        return self.__class__ is other.__class__ and self.coords == other.coords
