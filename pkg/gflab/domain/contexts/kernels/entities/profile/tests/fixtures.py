"""Module defining fixtures for the HurstProfile kernels entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.kernels.entities.profile import HurstProfile

from .factories import HurstProfileFactory, MarkedPointFactory


@fixture  # type: ignore
def hurst_profile_factory() -> Type[HurstProfileFactory]:
    """Fixture to return the factory to create a ``HurstProfile``.

    Returns
    -------
    Type[HurstProfileFactory]
        The ``HurstProfileFactory`` class.

    """
    return HurstProfileFactory


@fixture  # type: ignore
def hurst_profile() -> HurstProfile:
    """Fixture to return a ``HurstProfile``.

    Returns
    -------
    HurstProfile
        The created ``HurstProfile``

    """
    return HurstProfileFactory()


@fixture  # type: ignore
def marked_point_factory() -> Type[MarkedPointFactory]:
    """Fixture to return the factory to create a ``MarkedPoint``.

    Returns
    -------
    Type[MarkedPointFactory]
        The ``MarkedPointFactory`` class.

    """
    return MarkedPointFactory
