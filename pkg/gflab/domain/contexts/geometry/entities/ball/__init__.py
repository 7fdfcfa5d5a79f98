"""Package defining the :obj:`BallSpec` entity."""

from typing import Any

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    to_float,
    validate_positive_real,
    validated,
)

from ..point import Point


@validated()
class BallSpec(BaseEntity):
    """A closed euclidean ball ``B(center, radius)``, clipped to the nonnegative orthant.

    Attributes
    ----------
    center : Point
        The center of the ball.
    radius : float
        The radius of the ball, strictly positive.

    Examples
    --------
    >>> ball = BallSpec(center=Point.of(1, 1), radius=0.25)
    >>> ball.dimension
    2
    >>> BallSpec(center=Point.of(1), radius=0)
    Traceback (most recent call last):
        ...
    ValueError: BallSpec.radius must be a positive real

    """

    center: Point = required_field(Point)
    radius: float = required_field((int, float), converter=to_float)

    @field_validator(radius)
    def validate_radius(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`BallSpec.radius` field is a positive real.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        """
        validate_positive_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.radius",
        )

    @property
    def dimension(self) -> int:
        """Return the dimension of the index space."""
        return self.center.dimension
