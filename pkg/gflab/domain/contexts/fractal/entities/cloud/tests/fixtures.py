"""Module defining fixtures for the PointCloud fractal entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.fractal.entities import PointCloud

from .factories import PointCloudFactory


@fixture  # type: ignore
def point_cloud_factory() -> Type[PointCloudFactory]:
    """Fixture to return the factory to create a ``PointCloud``.

    Returns
    -------
    Type[PointCloudFactory]
        The ``PointCloudFactory`` class.

    """
    return PointCloudFactory


@fixture  # type: ignore
def point_cloud() -> PointCloud:
    """Fixture to return a ``PointCloud``.

    Returns
    -------
    PointCloud
        The created ``PointCloud``

    """
    return PointCloudFactory()
