"""Package defining the :obj:`PointCloud` entity."""

import enum
from typing import Any, Optional

import numpy as np

from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    validate_positive_integer,
    validated,
)


class DimensionTarget(enum.Enum):
    """The sets of a sample path whose dimension is measured."""

    GRAPH = "graph"
    RANGE = "range"


def _to_points(value: Any) -> Any:
    if isinstance(value, (list, tuple, np.ndarray)):
        array = np.asarray(value, dtype=float)
        return array.reshape(-1, 1) if array.ndim == 1 else array
    return value


@validated()
class PointCloud(BaseEntity):
    """A finite set of points of ``R^dim``, seen as a sampled fractal set.

    Attributes
    ----------
    dim : int
        The dimension of the ambient space.
    points : np.ndarray
        The ``(M, dim)`` array of the points, at least one, all finite.
    target : Optional[DimensionTarget]
        The set of a sample path the cloud samples, if any.

    Examples
    --------
    >>> cloud = PointCloud(dim=2, points=[[0, 0], [1, 0], [1, 2]])
    >>> cloud.size, cloud.extent
    (3, 2.0)
    >>> PointCloud(dim=1, points=[0.0, np.nan])
    Traceback (most recent call last):
        ...
    ValueError: PointCloud.points must be finite

    """

    dim: int = required_field(int, frozen=True)
    points: np.ndarray = required_field(np.ndarray, frozen=True, converter=_to_points)
    target: Optional[DimensionTarget] = optional_field(DimensionTarget, frozen=True)

    @field_validator(dim)
    def validate_dim(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`PointCloud.dim` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.dim",
        )

    @field_validator(points)
    def validate_points(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`PointCloud.points` are a nonempty set of finite points.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        ValueError
            If there is no point, if the points are not in ``R^dim``, or if a coordinate is not
            finite.

        """
        name = f"{self.__class__.__name__}.points"
        if value.ndim != 2 or value.shape[1] != self.dim:
            raise ValueError(f"{name} must be points of R^{self.dim}")
        if not len(value):
            raise ValueError(f"{name} must not be empty")
        if not np.all(np.isfinite(value)):
            raise ValueError(f"{name} must be finite")

    @property
    def size(self) -> int:
        """Return the number ``M`` of points."""
        return len(self.points)

    @property
    def lower(self) -> np.ndarray:
        """Return the lower corner of the bounding box of the points."""
        return self.points.min(axis=0)

    @property
    def sides(self) -> np.ndarray:
        """Return the lengths of the sides of the bounding box of the points."""
        return self.points.max(axis=0) - self.lower

    @property
    def extent(self) -> float:
        """Return the longest side of the bounding box of the points."""
        return float(np.max(self.sides))
