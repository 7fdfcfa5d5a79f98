"""Module holding BDD tests for the point clouds of sample paths as defined in ``clouds.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.contexts.fractal.clouds import (
    ball_mask,
    graph_cloud,
    range_cloud,
    restrict_ball,
)
from gflab.domain.contexts.fractal.entities import DimensionTarget
from gflab.domain.contexts.geometry.entities import BallSpec, Point
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.utils.errors import DimensionMismatchError, EmptyIntersectionError


FEATURE_FILE = "../features/clouds.feature"
scenario = partial(scenario, FEATURE_FILE)


def to_point(text):
    return Point.of(*(float(coord) for coord in text.strip("()").split(",")))


@scenario("The graph of a path lives in the product of its index and value spaces")
def test_graph_cloud():
    pass


@given(parsers.parse("a path of {count:d} points on [0, 1]"), target_fixture="path")
def a_path(count):
    grid = GridSpec.of([0], [1], count)
    values = np.sin(7 * grid.axes()[0])
    return SamplePath(grid=grid, values=values, d=1, seed=4, generator={"family": "test"})


@given(
    "a field with 2 coordinates on a 5 x 3 grid of [0, 1] x [1, 3]", target_fixture="path"
)
def a_planar_field():
    grid = GridSpec.of([0, 1], [1, 3], (5, 3))
    values = np.arange(30, dtype=float).reshape(15, 2)
    return SamplePath(grid=grid, values=values, d=2, seed=0, generator={})


@when("I take its graph", target_fixture="cloud")
def take_graph(path):
    return graph_cloud(path)


@when("I take its range", target_fixture="cloud")
def take_range(path):
    return range_cloud(path)


@then(parsers.parse("the cloud has {count:d} points of R^{dim:d}"))
def cloud_shape(cloud, count, dim):
    assert cloud.size == count
    assert cloud.dim == dim
    assert cloud.points.shape == (count, dim)


@then("the cloud samples the graph")
def cloud_is_graph(cloud, path):
    assert cloud.target is DimensionTarget.GRAPH
    assert np.array_equal(cloud.points[:, 1], path.values[:, 0])


@then("the first coordinates of the cloud are the grid points")
def cloud_grid_points(cloud):
    assert cloud.points[:, 0].tolist() == [0.0, 0.5, 1.0]


@then("the cloud samples the range")
def cloud_is_range(cloud, path):
    assert cloud.target is DimensionTarget.RANGE
    assert np.array_equal(cloud.points, path.values)


@when(
    parsers.parse("I restrict it to the ball of center {center} and radius {radius:g}"),
    target_fixture="restricted",
)
def restrict(path, center, radius):
    return restrict_ball(path, BallSpec(center=to_point(center), radius=radius))


@then(parsers.parse("the restricted path has {count:d} points"))
def restricted_size(restricted, count):
    assert restricted.grid.size == count
    assert restricted.values.shape == (count, 1)


@then("the restricted path keeps the values of its points")
def restricted_values(restricted):
    assert np.allclose(restricted.values[:, 0], np.sin(7 * restricted.points[:, 0]))


@then("the restricted path records the ball")
def restricted_generator(restricted):
    assert restricted.generator["family"] == "test"
    assert set(restricted.generator["ball"]) == {"center", "radius"}
    assert restricted.seed == 4


@then("the restricted path is the path itself")
def restricted_identity(restricted, path):
    assert restricted.grid.resolution == path.grid.resolution
    assert restricted.grid.domain.lower == path.grid.domain.lower
    assert restricted.grid.domain.upper == path.grid.domain.upper
    assert np.array_equal(restricted.values, path.values)


@then("the restricted path has a 4 x 2 grid")
def restricted_sub_grid(restricted):
    assert restricted.grid.resolution == (4, 2)
    assert restricted.grid.domain.lower == Point.of(0, 1)
    assert restricted.grid.domain.upper == Point.of(0.75, 2)


@then("the restricted path keeps the values of the sub-grid")
def restricted_sub_grid_values(restricted, path):
    expected = path.grid_values()[:4, :2].reshape(8, 2)
    assert np.array_equal(restricted.values, expected)
    assert restricted.values[2].tolist() == [6.0, 7.0]


@then("restricting it to the ball of center 2 and radius 0.5 fails")
def restrict_outside(path):
    with pytest.raises(EmptyIntersectionError):
        restrict_ball(path, BallSpec(center=Point.of(2), radius=0.5))


@then("restricting it to the ball of center 0.5 and radius 0.0005 fails")
def restrict_too_small(path):
    with pytest.raises(EmptyIntersectionError):
        restrict_ball(path, BallSpec(center=Point.of(0.5), radius=0.0005))


@then("restricting it to a ball of the plane fails")
def restrict_other_space(path):
    with pytest.raises(DimensionMismatchError):
        restrict_ball(path, BallSpec(center=Point.of(0.5, 0.5), radius=0.25))


@scenario("The points of a planar ball are the ones at Euclidean distance at most its radius")
def test_euclidean_ball():
    pass


@given("a scalar field on an 11 x 11 grid of the unit square", target_fixture="path")
def a_planar_scalar_field():
    grid = GridSpec.of([0, 0], [1, 1], (11, 11))
    values = np.sum(grid.points(), axis=1)
    return SamplePath(grid=grid, values=values, d=1, seed=0, generator={})


def central_mask(restricted):
    return ball_mask(restricted.grid, BallSpec(center=Point.of(0.5, 0.5), radius=0.5))


@then("the restricted path has an 11 x 11 grid")
def restricted_whole_grid(restricted):
    assert restricted.grid.resolution == (11, 11)


@then(parsers.parse("the ball holds {count:d} of its points"))
def ball_holds(restricted, count):
    assert int(central_mask(restricted).sum()) == count


@then("the corners of the restricted grid are outside the ball")
def corners_outside(restricted):
    mask = central_mask(restricted).reshape(11, 11)
    assert not mask[[0, 0, -1, -1], [0, -1, 0, -1]].any()
    assert mask[5, 0]


@then(parsers.parse("the graph of the ball has {count:d} points of R^3"))
def ball_graph(restricted, count):
    cloud = graph_cloud(restricted, central_mask(restricted))
    assert cloud.points.shape == (count, 3)
    assert np.all(np.sum((cloud.points[:, :2] - 0.5) ** 2, axis=1) <= 0.25 + 1e-12)


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
