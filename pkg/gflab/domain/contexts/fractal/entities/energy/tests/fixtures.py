"""Module defining fixtures for the EnergyReport fractal entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.fractal.entities import EnergyReport

from .factories import EnergyReportFactory, RieszEnergyFactory


@fixture  # type: ignore
def energy_report_factory() -> Type[EnergyReportFactory]:
    """Fixture to return the factory to create an ``EnergyReport``.

    Returns
    -------
    Type[EnergyReportFactory]
        The ``EnergyReportFactory`` class.

    """
    return EnergyReportFactory


@fixture  # type: ignore
def energy_report() -> EnergyReport:
    """Fixture to return an ``EnergyReport``.

    Returns
    -------
    EnergyReport
        The created ``EnergyReport``

    """
    return EnergyReportFactory()


@fixture  # type: ignore
def riesz_energy_factory() -> Type[RieszEnergyFactory]:
    """Fixture to return the factory to create a ``RieszEnergy``.

    Returns
    -------
    Type[RieszEnergyFactory]
        The ``RieszEnergyFactory`` class.

    """
    return RieszEnergyFactory
