"""Module defining fixtures for the Preset harness entity."""


from typing import Type

from pytest import fixture

from gflab.harness.entities import Preset

from .factories import PresetFactory


@fixture  # type: ignore
def preset_factory() -> Type[PresetFactory]:
    """Fixture to return the factory to create a ``Preset``.

    Returns
    -------
    Type[PresetFactory]
        The ``PresetFactory`` class.

    """
    return PresetFactory


@fixture  # type: ignore
def preset() -> Preset:
    """Fixture to return a ``Preset``.

    Returns
    -------
    Preset
        The created ``Preset``

    """
    return PresetFactory()
