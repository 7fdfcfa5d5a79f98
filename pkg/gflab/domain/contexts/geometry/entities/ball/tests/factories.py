"""Module defining factories for the BallSpec geometry entity."""

import factory

from gflab.domain.contexts.geometry.entities.ball import BallSpec
from gflab.domain.contexts.geometry.entities.point.tests.factories import PointFactory


class BallSpecFactory(factory.Factory):
    """Factory for the ``BallSpec`` geometry entity."""

    class Meta:
        """Factory config."""

        model = BallSpec

    center = factory.SubFactory(PointFactory)
    radius = factory.Faker("pyfloat", min_value=0.001, max_value=1)
