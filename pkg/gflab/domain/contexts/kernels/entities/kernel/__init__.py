"""Package defining the :obj:`IncrementKernel` entity."""

import enum
from collections import abc
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    validate_positive_integer,
    validated,
)
from gflab.domain.utils.errors import DimensionMismatchError, OutOfDomainError

from ..profile import HurstProfile


PairFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]

#: Relative tolerance used to decide if a point is inside the domain of a profile.
DOMAIN_TOLERANCE = 1e-12

#: Number of rows of a covariance matrix evaluated at once.
MATRIX_BLOCK_ROWS = 256


class KernelFamily(enum.Enum):
    """All the available families of incremental variance kernels."""

    FBM = "fbm"
    MPFBM = "mpfbm"
    MBM_ASYMPTOTIC = "mbm_asymptotic"
    GW = "gw"
    MBM_SPECTRAL = "mbm_spectral"


def _to_params(value: Any) -> Any:
    if isinstance(value, abc.Mapping):
        return dict(value)
    return value


@validated()
class IncrementKernel(BaseEntity):
    """The incremental variance ``σ²(s, t) = E|X_t - X_s|²`` of a Gaussian field, maybe with its covariance.

    Kernels are built by the functions of :obj:`gflab.domain.contexts.kernels.families`, that
    fill the evaluators from the family and its parameters.

    Attributes
    ----------
    family : KernelFamily
        The family of the field.
    dimension : int
        The dimension ``N`` of the index space.
    params : Dict[str, float]
        The scalar parameters of the family (``H``, ``lambda``, ``J``, ``K``, ``L``...).
    profile : Optional[HurstProfile]
        The Hurst profile, for the families with a varying regularity.
    sigma2_function : Callable[[np.ndarray, np.ndarray], np.ndarray]
        Vectorized evaluator of ``σ²`` on two ``(n, N)`` arrays of points.
    covariance_function : Optional[Callable[[np.ndarray, np.ndarray], np.ndarray]]
        Vectorized evaluator of the covariance, when the family provides one.

    """

    family: KernelFamily = required_field(KernelFamily, frozen=True)
    dimension: int = required_field(int, frozen=True)
    params: Dict[str, float] = required_field(dict, frozen=True, converter=_to_params)
    profile: Optional[HurstProfile] = optional_field(HurstProfile, frozen=True)
    sigma2_function: PairFunction = required_field(abc.Callable, frozen=True)  # type: ignore
    covariance_function: Optional[PairFunction] = optional_field(
        abc.Callable, frozen=True  # type: ignore
    )

    @field_validator(dimension)
    def validate_dimension(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`IncrementKernel.dimension` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.dimension",
        )

    @property
    def label(self) -> str:
        """Return the short name of the kernel used as context in errors."""
        return f"kernel[{self.family.value}]"

    @property
    def has_covariance(self) -> bool:
        """Tell if the kernel provides a covariance."""
        return self.covariance_function is not None

    def _check_points(self, s: np.ndarray, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        s = np.atleast_2d(np.asarray(s, dtype=float))
        t = np.atleast_2d(np.asarray(t, dtype=float))
        if s.shape[-1] != self.dimension or t.shape[-1] != self.dimension:
            raise DimensionMismatchError(
                f"points must have dimension {self.dimension}", context=self.label
            )
        if self.profile is not None:
            lower = self.profile.domain.lower.coords[0]
            upper = self.profile.domain.upper.coords[0]
            margin = DOMAIN_TOLERANCE * max(1.0, abs(upper))
            for points in (s, t):
                if np.any(points < lower - margin) or np.any(points > upper + margin):
                    raise OutOfDomainError(
                        f"points must lie in the profile domain [{lower:g}, {upper:g}]",
                        context=self.label,
                    )
        return s, t

    def sigma2_array(self, s: np.ndarray, t: np.ndarray) -> np.ndarray:
        """Evaluate ``σ²`` on each pair of rows of `s` and `t`.

        Raises
        ------
        DimensionMismatchError
            If the points do not have the dimension of the kernel.
        OutOfDomainError
            If a point is outside the domain of the profile.

        """
        s, t = self._check_points(s, t)
        return self.sigma2_function(s, t)

    def covariance_array(self, s: np.ndarray, t: np.ndarray) -> np.ndarray:
        """Evaluate the covariance on each pair of rows of `s` and `t`.

        Raises
        ------
        TypeError
            If the kernel does not provide a covariance.

        """
        if self.covariance_function is None:
            raise TypeError(f"{self.label} does not provide a covariance")
        s, t = self._check_points(s, t)
        return self.covariance_function(s, t)

    def covariance_matrix(self, points: np.ndarray) -> np.ndarray:
        """Return the covariance matrix of the field at the rows of `points`."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        count = len(points)
        matrix = np.empty((count, count))
        for start in range(0, count, MATRIX_BLOCK_ROWS):
            rows = points[start : start + MATRIX_BLOCK_ROWS]
            matrix[start : start + len(rows)] = self.covariance_array(
                np.repeat(rows, count, axis=0), np.tile(points, (len(rows), 1))
            ).reshape(len(rows), count)
        return (matrix + matrix.T) / 2

    def sigma2(self, s: Point, t: Point) -> float:
        """Return ``σ²(s, t)``."""
        return float(self.sigma2_array(s.as_array(), t.as_array())[0])

    def covariance(self, s: Point, t: Point) -> float:
        """Return the covariance of the field between `s` and `t`."""
        return float(self.covariance_array(s.as_array(), t.as_array())[0])
