"""Module defining fixtures for the WindowPolicy fractal entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.fractal.entities import WindowPolicy

from .factories import WindowPolicyFactory


@fixture  # type: ignore
def window_policy_factory() -> Type[WindowPolicyFactory]:
    """Fixture to return the factory to create a ``WindowPolicy``.

    Returns
    -------
    Type[WindowPolicyFactory]
        The ``WindowPolicyFactory`` class.

    """
    return WindowPolicyFactory


@fixture  # type: ignore
def window_policy() -> WindowPolicy:
    """Fixture to return a ``WindowPolicy``.

    Returns
    -------
    WindowPolicy
        The created ``WindowPolicy``

    """
    return WindowPolicyFactory()
