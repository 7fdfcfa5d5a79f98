"""Module defining factories for the report entities of the harness."""

import factory

from gflab.domain.contexts.exponents.entities.estimate.tests.factories import (
    ExponentEstimateFactory,
)
from gflab.domain.contexts.fractal.entities.dimension.tests.factories import (
    DimensionEstimateFactory,
)
from gflab.domain.contexts.geometry.entities import Point
from gflab.harness.entities import Check, RunResult, TheoremReport


class CheckFactory(factory.Factory):
    """Factory for the ``Check`` harness entity."""

    class Meta:
        """Factory config."""

        model = Check

    name = factory.Faker("pystr", min_chars=3, max_chars=12)
    low = factory.Faker("pyfloat", min_value=0.0, max_value=1.0)
    high = factory.LazyAttribute(lambda check: check.low + 0.5)
    measured = factory.LazyAttribute(lambda check: check.low + 0.25)
    tolerance = factory.Faker("pyfloat", min_value=0.0, max_value=0.1)


class RunResultFactory(factory.Factory):
    """Factory for the ``RunResult`` harness entity."""

    class Meta:
        """Factory config."""

        model = RunResult

    seed = factory.Faker("pyint", min_value=0, max_value=1000)
    t0 = factory.LazyFunction(lambda: Point.of(0.5))
    exponents = factory.LazyFunction(lambda: (ExponentEstimateFactory(),))
    alpha_tilde = 0.3
    alpha_under = 0.6
    graph_bounds = (1.4, 1.7)
    range_bounds = (1.0, 1.0)
    graph_dimension = factory.SubFactory(DimensionEstimateFactory)
    range_dimension = factory.SubFactory(DimensionEstimateFactory)
    trend = ((0.25, 1.5, 1.0), (0.125, 1.55, 1.0))


class TheoremReportFactory(factory.Factory):
    """Factory for the ``TheoremReport`` harness entity."""

    class Meta:
        """Factory config."""

        model = TheoremReport

    name = factory.Faker("pystr", min_chars=3, max_chars=12)
    config = factory.LazyFunction(lambda: {"schema": 1})
    results = factory.LazyFunction(lambda: (RunResultFactory(),))
    aggregates = factory.LazyFunction(dict)
    checks = factory.LazyFunction(lambda: (CheckFactory(), CheckFactory()))
