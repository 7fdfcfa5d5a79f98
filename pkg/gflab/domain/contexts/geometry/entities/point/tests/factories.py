"""Module defining factories for the Point geometry entity."""

import factory

from gflab.domain.contexts.geometry.entities.point import Point


class PointFactory(factory.Factory):
    """Factory for the ``Point`` geometry entity."""

    class Meta:
        """Factory config."""

        model = Point

    coords = factory.List(
        [factory.Faker("pyfloat", min_value=0, max_value=10) for __ in range(2)]
    )
