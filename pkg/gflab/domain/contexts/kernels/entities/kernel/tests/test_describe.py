"""Module holding BDD tests for gflab IncrementKernel kernels entity as defined in ``describe.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.entities.kernel import KernelFamily
from gflab.domain.contexts.kernels.profiles import constant_profile
from gflab.domain.utils.errors import DimensionMismatchError, OutOfDomainError
from gflab.domain.utils.testing.validation import (
    FrozenAttributeError,
    check_field,
    check_field_not_nullable,
    check_field_values,
)

from .fixtures import increment_kernel_factory


FEATURE_FILE = "../features/describe.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("An IncrementKernel has a family, a dimension and evaluators")
def test_increment_kernel_fields():
    pass


@given("an IncrementKernel", target_fixture="increment_kernel")
def an_increment_kernel(increment_kernel_factory):
    return increment_kernel_factory()


@then(parsers.parse("it must have a field named {field_name:w}"))
def increment_kernel_has_field(increment_kernel, field_name):
    check_field(increment_kernel, field_name)


@then(parsers.parse("its {field_name:w} is mandatory"))
def increment_kernel_field_is_mandatory(increment_kernel_factory, field_name):
    check_field_not_nullable(increment_kernel_factory, field_name)


@then(parsers.parse("its {field_name:w} must be a {field_type}"))
def increment_kernel_field_type(increment_kernel_factory, field_name, field_type):
    check_field_values(increment_kernel_factory, field_name, field_type)


@then(parsers.parse("its {field_name:w} cannot be changed"))
def increment_kernel_field_is_frozen(increment_kernel, field_name):
    with pytest.raises(FrozenAttributeError):
        setattr(increment_kernel, field_name, KernelFamily.FBM)


@then("evaluating it on points of another dimension fails")
def increment_kernel_dimension(increment_kernel):
    dimension = increment_kernel.dimension
    with pytest.raises(DimensionMismatchError):
        increment_kernel.sigma2_array(np.ones((3, dimension + 1)), np.ones((3, dimension + 1)))
    points = np.ones((3, dimension))
    assert np.all(increment_kernel.sigma2_array(points, points) == 0)


@then("evaluating it outside the domain of its profile fails")
def increment_kernel_domain(increment_kernel_factory):
    kernel = increment_kernel_factory(dimension=1, profile=constant_profile(0.5))
    assert kernel.sigma2(Point.of(0.25), Point.of(0.5)) == pytest.approx(0.25)
    with pytest.raises(OutOfDomainError) as raised:
        kernel.sigma2(Point.of(0.5), Point.of(1.5))
    assert str(raised.value).startswith(f"kernel[{kernel.family.value}]: ")


@then("its covariance matrix is symmetric")
def increment_kernel_covariance_matrix(increment_kernel):
    points = np.random.default_rng(0).uniform(0, 1, size=(300, increment_kernel.dimension))
    matrix = increment_kernel.covariance_matrix(points)
    assert matrix.shape == (300, 300)
    assert np.allclose(matrix, matrix.T)
    assert np.allclose(np.diag(matrix), np.sqrt(np.sum(points ** 2, axis=1)))


@then("asking the covariance of a kernel without one fails")
def increment_kernel_without_covariance(increment_kernel_factory):
    kernel = increment_kernel_factory(covariance_function=None)
    assert not kernel.has_covariance
    with pytest.raises(TypeError):
        kernel.covariance_matrix(np.ones((2, kernel.dimension)))


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
