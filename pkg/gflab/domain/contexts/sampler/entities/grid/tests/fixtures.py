"""Module defining fixtures for the GridSpec sampler entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.sampler.entities.grid import GridSpec

from .factories import GridSpecFactory


@fixture  # type: ignore
def grid_spec_factory() -> Type[GridSpecFactory]:
    """Fixture to return the factory to create a ``GridSpec``.

    Returns
    -------
    Type[GridSpecFactory]
        The ``GridSpecFactory`` class.

    """
    return GridSpecFactory


@fixture  # type: ignore
def grid_spec() -> GridSpec:
    """Fixture to return a ``GridSpec``.

    Returns
    -------
    GridSpec
        The created ``GridSpec``

    """
    return GridSpecFactory()
