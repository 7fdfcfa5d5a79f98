"""Module defining fixtures for the Point geometry entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.geometry.entities.point import Point

from .factories import PointFactory


@fixture  # type: ignore
def point_factory() -> Type[PointFactory]:
    """Fixture to return the factory to create a ``Point``.

    Returns
    -------
    Type[PointFactory]
        The ``PointFactory`` class.

    """
    return PointFactory


@fixture  # type: ignore
def point() -> Point:
    """Fixture to return a ``Point``.

    Returns
    -------
    Point
        The created ``Point``

    """
    return PointFactory()
