"""Module defining factories for the WindowPolicy fractal entity."""

import factory

from gflab.domain.contexts.fractal.entities import WindowPolicy


class WindowPolicyFactory(factory.Factory):
    """Factory for the ``WindowPolicy`` fractal entity."""

    class Meta:
        """Factory config."""

        model = WindowPolicy

    min_count = factory.Faker("pyint", min_value=1, max_value=32)
    saturation = factory.Faker("pyfloat", min_value=0.05, max_value=1.0)
    min_scales = factory.Faker("pyint", min_value=2, max_value=6)
    min_column_samples = factory.Faker("pyint", min_value=1, max_value=8)
