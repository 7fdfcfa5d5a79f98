"""Package defining the :obj:`RieszEnergy` and :obj:`EnergyReport` entities."""

import math
from typing import Any, Dict, Optional, Tuple

import numpy as np

from gflab.domain.contexts.exponents.entities.estimate import encode_real
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


#: Relative slack allowed on the growth of energies with ``β``, for rounding errors.
MONOTONY_TOLERANCE = 1e-9


def _to_rows(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        return tuple(to_float_tuple(row) for row in value)
    return value


def _to_sizes(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(int(item) if isinstance(item, np.integer) else item for item in value)
    return value


@validated()
class RieszEnergy(BaseEntity):
    """The Riesz energy of exponent ``β`` of the uniform measure on the distinct points of a cloud.

    Attributes
    ----------
    beta : float
        The exponent ``β``.
    energy : float
        The energy, ``inf`` when there are not two distinct points.
    size : int
        The number of distinct points the energy is computed on.
    duplicates : int
        The number of near-duplicate points left out.

    Examples
    --------
    >>> RieszEnergy(beta=1.0, energy=0.5, size=2, duplicates=1).to_dict()['duplicates']
    1

    """

    beta: float = required_field((int, float), frozen=True, converter=to_float)
    energy: float = required_field((int, float), frozen=True, converter=to_float)
    size: int = required_field(int, frozen=True)
    duplicates: int = required_field(int, frozen=True, default=0)

    @field_validator(beta)
    def validate_beta(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`RieszEnergy.beta` field is a positive real."""
        validate_positive_real(
            value=value, none_allowed=False, display_name=f"{self.__class__.__name__}.beta"
        )

    @field_validator(energy)
    def validate_energy(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`RieszEnergy.energy` field is a nonnegative real or infinity."""
        if math.isnan(value) or value < 0:
            raise ValueError(
                f"{self.__class__.__name__}.energy must be a nonnegative real or infinity"
            )

    @field_validator(size)
    def validate_size(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`RieszEnergy.size` field is a positive integer."""
        validate_positive_integer(
            value=value, none_allowed=False, display_name=f"{self.__class__.__name__}.size"
        )

    @field_validator(duplicates)
    def validate_duplicates(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`RieszEnergy.duplicates` field is a nonnegative integer."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.duplicates",
        )

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document, an infinite energy written as ``"inf"``."""
        return {
            "beta": self.beta,
            "energy": encode_real(self.energy),
            "size": self.size,
            "duplicates": self.duplicates,
        }


@validated()
class EnergyReport(BaseEntity):
    """The Riesz energies of a cloud at successive refinements, and the Frostman evidence.

    A finite energy ``I_β(μ)`` of a measure carried by a set implies that the set has a dimension
    of at least ``β``. Finite energies are detected as energies that stop growing when the cloud
    is refined.

    Attributes
    ----------
    betas : Tuple[float, ...]
        The strictly increasing exponents ``β``.
    level_sizes : Tuple[int, ...]
        The number of distinct points of the cloud at each refinement, coarsest first.
    level_energies : Tuple[Tuple[float, ...], ...]
        For each refinement, the energy at each ``β``, ``inf`` when there are not two distinct
        points. Nondecreasing in ``β``.
    growth : Tuple[float, ...]
        For each ``β``, the largest ratio of the energies of two successive refinements.
    threshold : float
        The relative growth under which an energy is stable.
    duplicates : int
        The number of near-duplicate points left out of the finest refinement.
    stable_max_beta : Optional[float]
        The largest ``β`` such that the energies at this ``β`` and all smaller ones are stable.
        ``None`` if the energy at the smallest ``β`` is not.

    Examples
    --------
    >>> report = EnergyReport(
    ...     betas=[0.5, 1.5],
    ...     level_sizes=[512, 1024],
    ...     level_energies=[[1.9, 9.0], [2.0, 12.0]],
    ...     growth=[2.0 / 1.9, 12.0 / 9.0],
    ...     threshold=0.1,
    ...     duplicates=0,
    ...     stable_max_beta=0.5,
    ... )
    >>> report.energies
    (2.0, 12.0)

    """

    betas: Tuple[float, ...] = required_field(tuple, frozen=True, converter=to_float_tuple)
    level_sizes: Tuple[int, ...] = required_field(tuple, frozen=True, converter=_to_sizes)
    level_energies: Tuple[Tuple[float, ...], ...] = required_field(
        tuple, frozen=True, converter=_to_rows
    )
    growth: Tuple[float, ...] = required_field(tuple, frozen=True, converter=to_float_tuple)
    threshold: float = required_field((int, float), frozen=True, converter=to_float)
    duplicates: int = required_field(int, frozen=True)
    stable_max_beta: Optional[float] = optional_field(
        (int, float), frozen=True, converter=to_float
    )

    @field_validator(betas)
    def validate_betas(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`EnergyReport.betas` are strictly increasing and positive."""
        name = f"{self.__class__.__name__}.betas"
        if not value:
            raise ValueError(f"{name} must not be empty")
        for beta in value:
            validate_positive_real(value=beta, none_allowed=False, display_name=name)
        if any(later <= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError(f"{name} must be strictly increasing")

    @field_validator(level_sizes)
    def validate_level_sizes(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there are two :obj:`EnergyReport.level_sizes` or more."""
        name = f"{self.__class__.__name__}.level_sizes"
        if len(value) < 2:
            raise ValueError(f"{name} must have at least 2 refinements")
        for size in value:
            validate_positive_integer(value=size, none_allowed=False, display_name=name)

    @field_validator(level_energies)
    def validate_level_energies(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`EnergyReport.level_energies` are nondecreasing in ``β``.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        ValueError
            If there is not one row per refinement with one energy per ``β``, if an energy is
            not a nonnegative real or infinity, or if energies decrease when ``β`` grows.

        """
        name = f"{self.__class__.__name__}.level_energies"
        if len(value) != len(self.level_sizes):
            raise ValueError(f"{name} must have one row per refinement")
        for row in value:
            if len(row) != len(self.betas):
                raise ValueError(f"{name} must have one energy per beta")
            for energy in row:
                if not isinstance(energy, float) or math.isnan(energy) or energy < 0:
                    raise ValueError(f"{name} must be nonnegative reals or infinity")
            if any(
                later < earlier * (1 - MONOTONY_TOLERANCE)
                for earlier, later in zip(row, row[1:])
            ):
                raise ValueError(f"{name} must be nondecreasing in beta")

    @field_validator(growth)
    def validate_growth(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there is one :obj:`EnergyReport.growth` per ``β``."""
        if len(value) != len(self.betas):
            raise ValueError(f"{self.__class__.__name__}.growth must have one value per beta")

    @field_validator(threshold)
    def validate_threshold(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`EnergyReport.threshold` field is a positive real."""
        validate_positive_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.threshold",
        )

    @field_validator(duplicates)
    def validate_duplicates(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`EnergyReport.duplicates` field is a nonnegative integer."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.duplicates",
        )

    @field_validator(stable_max_beta)
    def validate_stable_max_beta(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`EnergyReport.stable_max_beta` is one of the ``β``."""
        if value is not None and value not in self.betas:
            raise ValueError(
                f"{self.__class__.__name__}.stable_max_beta must be one of the betas"
            )

    @property
    def energies(self) -> Tuple[float, ...]:
        """Return the energies of the finest refinement."""
        return self.level_energies[-1]

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document, infinite values written as ``"inf"``."""
        return {
            "betas": list(self.betas),
            "energies": [encode_real(energy) for energy in self.energies],
            "level_sizes": list(self.level_sizes),
            "level_energies": [
                [encode_real(energy) for energy in row] for row in self.level_energies
            ],
            "growth": [encode_real(ratio) for ratio in self.growth],
            "threshold": self.threshold,
            "duplicates": self.duplicates,
            "stable_max_beta": self.stable_max_beta,
        }
