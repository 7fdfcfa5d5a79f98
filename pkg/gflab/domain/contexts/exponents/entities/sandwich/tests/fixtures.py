"""Module defining fixtures for the SandwichReport and SandwichViolation exponents entities."""


from typing import Type

from pytest import fixture

from .factories import SandwichReportFactory, SandwichViolationFactory


@fixture  # type: ignore
def sandwich_report_factory() -> Type[SandwichReportFactory]:
    """Fixture to return the factory to create a ``SandwichReport``.

    Returns
    -------
    Type[SandwichReportFactory]
        The ``SandwichReportFactory`` class.

    """
    return SandwichReportFactory


@fixture  # type: ignore
def sandwich_violation_factory() -> Type[SandwichViolationFactory]:
    """Fixture to return the factory to create a ``SandwichViolation``.

    Returns
    -------
    Type[SandwichViolationFactory]
        The ``SandwichViolationFactory`` class.

    """
    return SandwichViolationFactory
