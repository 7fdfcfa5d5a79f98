"""Package defining the :obj:`GridSpec` entity."""

from typing import Any, List, Sequence, Tuple, Union

import numpy as np

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    required_field,
    validated,
)
from gflab.domain.utils.errors import BudgetExceededError, DimensionMismatchError


#: Maximum number of points of a grid.
MAX_GRID_POINTS = 2 ** 22


def _to_resolution(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return (value,)
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return value


@validated()
class GridSpec(BaseEntity):
    """A regular grid over a box, with both ends of every axis included.

    Attributes
    ----------
    domain : Box
        The box covered by the grid.
    resolution : Tuple[int, ...]
        The number of points on each axis, at least 2.

    Examples
    --------
    >>> grid = GridSpec.of([0], [1], 5)
    >>> grid.axes()[0].tolist()
    [0.0, 0.25, 0.5, 0.75, 1.0]
    >>> GridSpec.of([0, 0], [1, 1], (3, 2)).points().tolist()
    [[0.0, 0.0], [0.0, 1.0], [0.5, 0.0], [0.5, 1.0], [1.0, 0.0], [1.0, 1.0]]
    >>> GridSpec.of([0], [1], 1)
    Traceback (most recent call last):
        ...
    ValueError: GridSpec.resolution must be integers of at least 2

    """

    domain: Box = required_field(Box, frozen=True)
    resolution: Tuple[int, ...] = required_field(
        tuple, frozen=True, converter=_to_resolution
    )

    @field_validator(domain)
    def validate_domain(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`GridSpec.domain` field has a positive length on every axis."""
        if np.any(value.lengths <= 0):
            raise ValueError(
                f"{self.__class__.__name__}.domain must have a positive length on every axis"
            )

    @field_validator(resolution)
    def validate_resolution(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate the :obj:`GridSpec.resolution` field against the domain and the budget.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        TypeError
            If a count is not an integer.
        ValueError
            If a count is below 2.
        DimensionMismatchError
            If there is not one count per axis of the domain.
        BudgetExceededError
            If the grid has more than :obj:`MAX_GRID_POINTS` points.

        """
        name = f"{self.__class__.__name__}.resolution"
        for count in value:
            if isinstance(count, bool) or not isinstance(count, (int, np.integer)):
                raise TypeError(f"{name} must be integers of at least 2")
            if count < 2:
                raise ValueError(f"{name} must be integers of at least 2")
        if isinstance(self.domain, Box) and len(value) != self.domain.dimension:
            raise DimensionMismatchError(f"{name} must have one count per axis of the domain")
        total = int(np.prod(value, dtype=np.int64))
        if total > MAX_GRID_POINTS:
            raise BudgetExceededError(
                f"{name} gives {total} points, above the budget of {MAX_GRID_POINTS}"
            )

    @classmethod
    def of(
        cls,
        lower: Sequence[float],
        upper: Sequence[float],
        resolution: Union[int, Sequence[int]],
    ) -> "GridSpec":
        """Create a grid from its corners and its resolution.

        An integer `resolution` is used for every axis.
        """
        if isinstance(resolution, int) and not isinstance(resolution, bool):
            resolution = (resolution,) * len(lower)
        return cls(domain=Box.of(lower, upper), resolution=resolution)

    @property
    def dimension(self) -> int:
        """Return the dimension ``N`` of the index space."""
        return len(self.resolution)

    @property
    def size(self) -> int:
        """Return the total number of points of the grid."""
        return int(np.prod(self.resolution, dtype=np.int64))

    @property
    def spacing(self) -> np.ndarray:
        """Return the step of the grid on each axis."""
        return self.domain.lengths / (np.array(self.resolution) - 1)

    def axes(self) -> List[np.ndarray]:
        """Return the coordinates of the grid points on each axis."""
        return [
            np.linspace(low, high, count)
            for low, high, count in zip(
                self.domain.lower.coords, self.domain.upper.coords, self.resolution
            )
        ]

    def points(self) -> np.ndarray:
        """Return the ``(size, N)`` array of the grid points, the last axis varying fastest."""
        mesh = np.meshgrid(*self.axes(), indexing="ij")
        return np.stack(mesh, axis=-1).reshape(-1, self.dimension)
