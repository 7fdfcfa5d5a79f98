"""Module defining factories for the HurstProfile kernels entity."""

import factory

from faker_enum import EnumProvider

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.contexts.kernels.entities.profile import (
    HurstProfile,
    MarkedPoint,
    ProfileKind,
)


factory.Faker.add_provider(EnumProvider)

#: Valid parameters on ``[0, 1]`` for each kind of profile.
PARAMS_BY_KIND = {
    ProfileKind.CONSTANT: [0.5],
    ProfileKind.AFFINE: [0.3, 0.4],
    ProfileKind.POWER_CUSP: [0.3, 0.4, 0.5, 0.5],
    ProfileKind.SMOOTH_PERIODIC: [0.5, 0.2, 1.0, 0.0],
    ProfileKind.USER_TABLE: [0.0, 0.3, 0.5, 0.7, 1.0, 0.4],
}


class MarkedPointFactory(factory.Factory):
    """Factory for the ``MarkedPoint`` kernels entity."""

    class Meta:
        """Factory config."""

        model = MarkedPoint

    t0 = factory.Faker("pyfloat", min_value=0, max_value=1)
    local_exponent = factory.Faker("pyfloat", min_value=0.1, max_value=1)
    sub_exponent = factory.LazyAttribute(lambda marked: marked.local_exponent + 0.5)


class HurstProfileFactory(factory.Factory):
    """Factory for the ``HurstProfile`` kernels entity."""

    class Meta:
        """Factory config."""

        model = HurstProfile

    kind = factory.Faker("enum", enum_cls=ProfileKind)
    params = factory.LazyAttribute(lambda profile: PARAMS_BY_KIND.get(profile.kind, [0.5]))
    domain = factory.LazyFunction(lambda: Box.of([0], [1]))
