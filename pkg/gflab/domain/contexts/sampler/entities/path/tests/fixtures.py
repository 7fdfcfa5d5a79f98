"""Module defining fixtures for the SamplePath sampler entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.sampler.entities.path import SamplePath

from .factories import SamplePathFactory


@fixture  # type: ignore
def sample_path_factory() -> Type[SamplePathFactory]:
    """Fixture to return the factory to create a ``SamplePath``.

    Returns
    -------
    Type[SamplePathFactory]
        The ``SamplePathFactory`` class.

    """
    return SamplePathFactory


@fixture  # type: ignore
def sample_path() -> SamplePath:
    """Fixture to return a ``SamplePath``.

    Returns
    -------
    SamplePath
        The created ``SamplePath``

    """
    return SamplePathFactory()
