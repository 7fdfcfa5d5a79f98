"""Module defining fixtures for the configuration entities of the harness."""


from typing import Type

from pytest import fixture

from .factories import ExperimentConfigFactory, ProcessConfigFactory, TolerancesFactory


@fixture  # type: ignore
def tolerances_factory() -> Type[TolerancesFactory]:
    """Fixture to return the factory to create ``Tolerances``.

    Returns
    -------
    Type[TolerancesFactory]
        The ``TolerancesFactory`` class.

    """
    return TolerancesFactory


@fixture  # type: ignore
def process_config_factory() -> Type[ProcessConfigFactory]:
    """Fixture to return the factory to create a ``ProcessConfig``.

    Returns
    -------
    Type[ProcessConfigFactory]
        The ``ProcessConfigFactory`` class.

    """
    return ProcessConfigFactory


@fixture  # type: ignore
def experiment_config_factory() -> Type[ExperimentConfigFactory]:
    """Fixture to return the factory to create an ``ExperimentConfig``.

    Returns
    -------
    Type[ExperimentConfigFactory]
        The ``ExperimentConfigFactory`` class.

    """
    return ExperimentConfigFactory
