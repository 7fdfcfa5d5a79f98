"""Module defining fixtures for the ExponentEstimate exponents entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.exponents.entities import ExponentEstimate

from .factories import ExponentEstimateFactory


@fixture  # type: ignore
def exponent_estimate_factory() -> Type[ExponentEstimateFactory]:
    """Fixture to return the factory to create an ``ExponentEstimate``.

    Returns
    -------
    Type[ExponentEstimateFactory]
        The ``ExponentEstimateFactory`` class.

    """
    return ExponentEstimateFactory


@fixture  # type: ignore
def exponent_estimate() -> ExponentEstimate:
    """Fixture to return an ``ExponentEstimate``.

    Returns
    -------
    ExponentEstimate
        The created ``ExponentEstimate``

    """
    return ExponentEstimateFactory()
