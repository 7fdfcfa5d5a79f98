"""Module defining fixtures for the DimensionEstimate fractal entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.fractal.entities import DimensionEstimate

from .factories import DimensionEstimateFactory


@fixture  # type: ignore
def dimension_estimate_factory() -> Type[DimensionEstimateFactory]:
    """Fixture to return the factory to create a ``DimensionEstimate``.

    Returns
    -------
    Type[DimensionEstimateFactory]
        The ``DimensionEstimateFactory`` class.

    """
    return DimensionEstimateFactory


@fixture  # type: ignore
def dimension_estimate() -> DimensionEstimate:
    """Fixture to return a ``DimensionEstimate``.

    Returns
    -------
    DimensionEstimate
        The created ``DimensionEstimate``

    """
    return DimensionEstimateFactory()
