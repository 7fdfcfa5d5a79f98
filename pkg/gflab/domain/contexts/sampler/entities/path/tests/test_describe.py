"""Module holding BDD tests for gflab SamplePath sampler entity as defined in ``describe.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then

from gflab.domain.contexts.sampler.entities.grid import GridSpec
from gflab.domain.contexts.sampler.entities.path import SamplePath
from gflab.domain.utils.testing.validation import (
    check_field,
    check_field_not_nullable,
)

from .fixtures import sample_path_factory


FEATURE_FILE = "../features/describe.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("A SamplePath holds the values of a field on a grid")
def test_path_fields():
    pass


@given("a SamplePath", target_fixture="sample_path")
def a_sample_path(sample_path_factory):
    return sample_path_factory()


@then(parsers.parse("it must have a field named {field_name:w}"))
def path_has_field(sample_path, field_name):
    check_field(sample_path, field_name)


@then(parsers.parse("its {field_name:w} is mandatory"))
def path_field_is_mandatory(sample_path_factory, field_name):
    check_field_not_nullable(
        sample_path_factory, field_name, d=1, values=np.zeros((65, 1))
    )


@then(parsers.parse("its {field_name:w} cannot be changed"))
def path_field_is_frozen(sample_path, field_name):
    with pytest.raises(AttributeError):
        setattr(sample_path, field_name, getattr(sample_path, field_name))


@then("values with a missing row are refused")
def path_missing_row(sample_path_factory):
    with pytest.raises(ValueError):
        sample_path_factory(d=1, values=np.zeros((64, 1)))


@then("values with a missing coordinate are refused")
def path_missing_coordinate(sample_path_factory):
    with pytest.raises(ValueError):
        sample_path_factory(d=2, values=np.zeros((65, 1)))


@then("values that are not finite are refused")
def path_not_finite(sample_path_factory):
    values = np.zeros((65, 1))
    values[3, 0] = np.nan
    with pytest.raises(ValueError):
        sample_path_factory(d=1, values=values)


@given("a SamplePath of 2 coordinates over a 3 x 2 grid", target_fixture="sample_path")
def a_2d_path():
    return SamplePath(
        grid=GridSpec.of([0, 0], [1, 1], (3, 2)),
        values=np.arange(12.0).reshape(6, 2),
        d=2,
        seed=0,
        generator={"method": "arange"},
    )


@then("its second coordinate is a column of its values")
def path_coordinate(sample_path):
    assert sample_path.coordinate(1).tolist() == [1.0, 3.0, 5.0, 7.0, 9.0, 11.0]


@then("its grid values are shaped as the grid")
def path_grid_values(sample_path):
    grid_values = sample_path.grid_values()
    assert grid_values.shape == (3, 2, 2)
    assert grid_values[1, 0].tolist() == [4.0, 5.0]


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
