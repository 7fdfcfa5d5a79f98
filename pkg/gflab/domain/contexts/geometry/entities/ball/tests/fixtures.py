"""Module defining fixtures for the BallSpec geometry entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.geometry.entities.ball import BallSpec

from .factories import BallSpecFactory


@fixture  # type: ignore
def ball_spec_factory() -> Type[BallSpecFactory]:
    """Fixture to return the factory to create a ``BallSpec``.

    Returns
    -------
    Type[BallSpecFactory]
        The ``BallSpecFactory`` class.

    """
    return BallSpecFactory


@fixture  # type: ignore
def ball_spec() -> BallSpec:
    """Fixture to return a ``BallSpec``.

    Returns
    -------
    BallSpec
        The created ``BallSpec``

    """
    return BallSpecFactory()
