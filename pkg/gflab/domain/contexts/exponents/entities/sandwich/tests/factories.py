"""Module defining factories for the SandwichReport and SandwichViolation exponents entities."""

import factory

from gflab.domain.contexts.exponents.entities import SandwichReport, SandwichViolation
from gflab.domain.contexts.geometry.entities import Point


class SandwichViolationFactory(factory.Factory):
    """Factory for the ``SandwichViolation`` exponents entity."""

    class Meta:
        """Factory config."""

        model = SandwichViolation

    rho = 0.125
    s = factory.LazyFunction(lambda: Point.of(0.5))
    t = factory.LazyFunction(lambda: Point.of(0.6))
    sigma2 = factory.Faker("pyfloat", min_value=0.5, max_value=1.0)
    lower = 0.01
    upper = 0.1


class SandwichReportFactory(factory.Factory):
    """Factory for the ``SandwichReport`` exponents entity."""

    class Meta:
        """Factory config."""

        model = SandwichReport

    t0 = factory.LazyFunction(lambda: Point.of(0.5))
    epsilon = factory.Faker("pyfloat", min_value=0.01, max_value=0.2)
    alpha_tilde_hat = 0.5
    alpha_under_hat = 0.5
    rho_ladder = factory.LazyFunction(lambda: [0.25, 0.125, 0.0625])
    violation_counts = factory.LazyFunction(lambda: [1, 0, 0])
    violations = factory.LazyFunction(lambda: [SandwichViolationFactory(rho=0.25)])
    rho0_found = 0.125
