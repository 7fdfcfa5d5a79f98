"""Module defining fixtures for the Box geometry entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.geometry.entities.box import Box

from .factories import BoxFactory


@fixture  # type: ignore
def box_factory() -> Type[BoxFactory]:
    """Fixture to return the factory to create a ``Box``.

    Returns
    -------
    Type[BoxFactory]
        The ``BoxFactory`` class.

    """
    return BoxFactory


@fixture  # type: ignore
def box() -> Box:
    """Fixture to return a ``Box``.

    Returns
    -------
    Box
        The created ``Box``

    """
    return BoxFactory()
