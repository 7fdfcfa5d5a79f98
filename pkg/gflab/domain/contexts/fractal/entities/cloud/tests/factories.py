"""Module defining factories for the PointCloud fractal entity."""

import factory
import numpy as np

from faker_enum import EnumProvider

from gflab.domain.contexts.fractal.entities import DimensionTarget, PointCloud


factory.Faker.add_provider(EnumProvider)


class PointCloudFactory(factory.Factory):
    """Factory for the ``PointCloud`` fractal entity."""

    class Meta:
        """Factory config."""

        model = PointCloud

    dim = 2
    points = factory.LazyFunction(lambda: np.random.default_rng().uniform(0, 1, size=(20, 2)))
    target = factory.Faker("enum", enum_cls=DimensionTarget)
