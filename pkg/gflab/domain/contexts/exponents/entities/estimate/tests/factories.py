"""Module defining factories for the ExponentEstimate exponents entity."""

import factory

from gflab.domain.contexts.exponents.entities import ExponentEstimate
from gflab.domain.contexts.geometry.entities import Point


class ExponentEstimateFactory(factory.Factory):
    """Factory for the ``ExponentEstimate`` exponents entity."""

    class Meta:
        """Factory config."""

        model = ExponentEstimate

    t0 = factory.LazyFunction(lambda: Point.of(0.5))
    rho_ladder = factory.LazyFunction(lambda: [2.0 ** -k for k in range(3, 11)])
    inf_ratio = factory.LazyAttribute(
        lambda estimate: [0.3 - 0.01 * k for k in reversed(range(len(estimate.rho_ladder)))]
    )
    sup_ratio = factory.LazyAttribute(
        lambda estimate: [0.6 + 0.01 * k for k in reversed(range(len(estimate.rho_ladder)))]
    )
    alpha_tilde_hat = factory.LazyAttribute(lambda estimate: estimate.inf_ratio[-1])
    alpha_under_hat = factory.LazyAttribute(lambda estimate: estimate.sup_ratio[-1])
    pair_count = factory.Faker("pyint", min_value=1, max_value=10_000)
    diagnostics = factory.LazyFunction(dict)
