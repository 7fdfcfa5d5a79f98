"""Package defining the :obj:`SamplePath` entity."""

from typing import Any, Dict

import numpy as np

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    validate_positive_integer,
    validated,
)

from ..grid import GridSpec


def _to_values(value: Any) -> Any:
    if isinstance(value, (list, tuple, np.ndarray)):
        array = np.asarray(value, dtype=float)
        return array.reshape(-1, 1) if array.ndim == 1 else array
    return value


@validated()
class SamplePath(BaseEntity):
    """A realization ``t ↦ X_t ∈ R^d`` of a field on the points of a grid.

    Attributes
    ----------
    grid : GridSpec
        The grid where the field is observed.
    values : np.ndarray
        The ``(grid.size, d)`` array of values, rows following :obj:`GridSpec.points`.
    d : int
        The number of coordinates of the field.
    seed : int
        The seed the path was drawn from.
    generator : Dict[str, Any]
        Provenance record: the family, its parameters and the sampling method.

    Examples
    --------
    >>> grid = GridSpec.of([0], [1], 3)
    >>> path = SamplePath(grid=grid, values=[0.0, 1.0, 0.5], d=1, seed=0, generator={})
    >>> path.values.shape
    (3, 1)
    >>> SamplePath(grid=grid, values=[0.0, 1.0], d=1, seed=0, generator={})
    Traceback (most recent call last):
        ...
    ValueError: SamplePath.values must have one row of 1 value(s) per grid point

    """

    grid: GridSpec = required_field(GridSpec, frozen=True)
    values: np.ndarray = required_field(np.ndarray, frozen=True, converter=_to_values)
    d: int = required_field(int, frozen=True)
    seed: int = required_field(int, frozen=True)
    generator: Dict[str, Any] = required_field(dict, frozen=True)

    @field_validator(d)
    def validate_d(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate the :obj:`SamplePath.d` field, and the shape of the values against it."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.d",
        )
        if not isinstance(self.values, np.ndarray) or not isinstance(self.grid, GridSpec):
            return
        if self.values.shape != (self.grid.size, value):
            raise ValueError(
                f"{self.__class__.__name__}.values must have one row of {value} value(s) "
                "per grid point"
            )

    @field_validator(values)
    def validate_values(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`SamplePath.values` are finite."""
        if not np.all(np.isfinite(value)):
            raise ValueError(f"{self.__class__.__name__}.values must be finite")

    @property
    def points(self) -> np.ndarray:
        """Return the grid points, one row per value."""
        return self.grid.points()

    def coordinate(self, index: int) -> np.ndarray:
        """Return the values of the coordinate process of rank `index`."""
        return self.values[:, index]

    def grid_values(self) -> np.ndarray:
        """Return the values shaped as ``resolution + (d,)``."""
        return self.values.reshape(tuple(self.grid.resolution) + (self.d,))
