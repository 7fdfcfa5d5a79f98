"""Module holding BDD tests for the box counting of clouds and graphs as defined in ``counting.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.contexts.fractal.clouds import graph_cloud, range_cloud
from gflab.domain.contexts.fractal.counting import (
    box_count,
    box_dimension,
    dyadic_scales,
    graph_box_count,
    graph_box_dimension,
    localized_dimension,
    range_box_count,
    range_box_dimension,
)
from gflab.domain.contexts.fractal.entities import DimensionTarget, PointCloud
from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.profiles import affine_profile
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.contexts.sampler.gaussian import sample_fbm_hosking
from gflab.domain.contexts.sampler.series import sample_gw, weierstrass_function
from gflab.domain.utils.errors import (
    InsufficientDataError,
    NoValidWindowError,
    OutOfDomainError,
)


FEATURE_FILE = "../features/counting.feature"
scenario = partial(scenario, FEATURE_FILE)

RADII = [0.25, 0.125, 0.0625]


def scalar_path(count, function):
    grid = GridSpec.of([0], [1], count)
    return SamplePath(
        grid=grid, values=function(grid.axes()[0]), d=1, seed=0, generator={}
    )


@scenario("Counting the occupied boxes of a cloud")
def test_box_count():
    pass


@given("the unit segment sampled every 1/1024", target_fixture="cloud")
def unit_segment():
    return PointCloud(dim=2, points=[[k / 1024, 0.0] for k in range(1025)])


@given("a single point", target_fixture="cloud")
def single_point():
    return PointCloud(dim=2, points=[[0.3, 0.7]])


@given("the 33 x 33 grid of the unit square", target_fixture="cloud")
def small_square_grid():
    return PointCloud(dim=2, points=GridSpec.of([0, 0], [1, 1], 33).points())


@given("the 256 x 256 grid of the unit square", target_fixture="cloud")
def large_square_grid():
    return PointCloud(dim=2, points=GridSpec.of([0, 0], [1, 1], 256).points())


@given("5000 random points of the unit square", target_fixture="cloud")
def random_square():
    return PointCloud(dim=2, points=np.random.default_rng(11).uniform(0, 1, size=(5000, 2)))


@then(parsers.parse("it occupies {count:d} boxes of side {delta:g}"))
def cloud_box_count(cloud, count, delta):
    assert box_count(cloud, delta) == count


@then("its box counts do not decrease along the dyadic scales")
def cloud_box_count_monotone(cloud):
    counts = [box_count(cloud, delta) for delta in dyadic_scales(cloud.extent, 1e-6)]
    assert all(later >= earlier for earlier, later in zip(counts, counts[1:]))
    assert counts[-1] == cloud.size


@given(
    parsers.parse("the line 2t sampled on {count:d} points of [0, 1]"), target_fixture="path"
)
def line_path(count):
    return scalar_path(count, lambda t: 2 * t)


@given("a jump from 0 to 1 at 0.5 sampled on 101 points of [0, 1]", target_fixture="path")
def jump_path():
    return scalar_path(101, lambda t: (t >= 0.5).astype(float))


@then(parsers.parse("its graph crosses {count:d} boxes of side {delta:g}"))
def path_graph_box_count(path, count, delta):
    assert graph_box_count(path, delta) == count


@then(
    parsers.parse(
        "its graph crosses {count:d} boxes of side {delta:g} with {samples:d} samples per column"
    )
)
def path_thinned_graph_box_count(path, count, delta, samples):
    assert graph_box_count(path, delta, column_samples=samples) == count


@then(parsers.parse("its range crosses {count:d} boxes of side {delta:g}"))
def path_range_box_count(path, count, delta):
    assert range_box_count(path, delta) == count


@then(parsers.parse("its range cloud only occupies {count:d} boxes of side {delta:g}"))
def path_range_cloud_box_count(path, count, delta):
    assert box_count(range_cloud(path), delta) == count


@then(parsers.parse("its graph cloud only occupies {count:d} boxes of side {delta:g}"))
def path_cloud_box_count(path, count, delta):
    assert box_count(graph_cloud(path), delta) == count


@then(parsers.parse("its box dimension is {dimension:g} within {tolerance:g}"))
def cloud_box_dimension(cloud, dimension, tolerance):
    estimate = box_dimension(cloud)
    assert estimate.slope == pytest.approx(dimension, abs=tolerance)
    assert estimate.r2 > 0.99


@given(
    parsers.parse(
        "the Weierstrass function with H={hurst:g}, λ=2 and 30 terms "
        "sampled on 2^15 points of [0, 1]"
    ),
    target_fixture="path",
)
def weierstrass_path(hurst):
    return scalar_path(
        2 ** 15 + 1, lambda t: weierstrass_function(t, hurst, lam=2.0, truncation=30)
    )


@then(parsers.parse("its graph box dimension is {dimension:g} within {tolerance:g}"))
def path_graph_box_dimension(path, dimension, tolerance):
    estimate = graph_box_dimension(path)
    assert estimate.target is DimensionTarget.GRAPH
    assert estimate.slope == pytest.approx(dimension, abs=tolerance)


@then(parsers.parse("its range box dimension is {dimension:g} within {tolerance:g}"))
def path_range_box_dimension(path, dimension, tolerance):
    estimate = range_box_dimension(path)
    assert estimate.target is DimensionTarget.RANGE
    assert estimate.slope == pytest.approx(dimension, abs=tolerance)


@then("its box dimension is between 0 and 2")
def cloud_box_dimension_bounds(cloud):
    assert 0 <= box_dimension(cloud).slope <= 2


@then("the window of its box dimension has at least 3 scales")
def cloud_box_dimension_window(cloud):
    estimate = box_dimension(cloud)
    assert len(estimate.window_scales) >= 3
    counts = estimate.counts[estimate.window[0] : estimate.window[1]]
    assert min(counts) >= 8
    assert max(counts) <= 0.25 * cloud.size


@then("a box dimension with 4 scales is refused")
def box_dimension_few_scales(cloud):
    with pytest.raises(InsufficientDataError):
        box_dimension(cloud, [0.5, 0.25, 0.125, 0.0625])


@then("a box dimension of 50 points is refused")
def box_dimension_few_points(cloud):
    with pytest.raises(InsufficientDataError):
        box_dimension(PointCloud(dim=2, points=cloud.points[:50]))


@then("a box dimension where no scale has 8 boxes is refused")
def box_dimension_no_window(cloud):
    with pytest.raises(NoValidWindowError):
        box_dimension(cloud, [1.0, 0.9, 0.8, 0.7, 0.6])


@when(
    parsers.parse(
        "I measure its localized graph dimension at {t0:g} on the radii 0.25, 0.125 and 0.0625"
    ),
    target_fixture="graph_estimates",
)
def measure_graph(path, t0):
    return localized_dimension(path, Point.of(t0), RADII)


@when(
    parsers.parse(
        "I measure its localized range dimension at {t0:g} on the radii 0.25, 0.125 and 0.0625"
    ),
    target_fixture="range_estimates",
)
def measure_range(path, t0):
    return localized_dimension(path, Point.of(t0), RADII, target="range")


@then("there is one estimate per radius")
def one_estimate_per_radius(graph_estimates):
    assert [rho for rho, _ in graph_estimates] == RADII


@then(parsers.parse("every estimate is {dimension:g} within {tolerance:g}"))
def every_estimate_close(graph_estimates, dimension, tolerance):
    for _, estimate in graph_estimates:
        assert estimate.slope == pytest.approx(dimension, abs=tolerance)


@given("a Brownian motion sampled on 4097 points of [0, 1]", target_fixture="path")
def brownian_path():
    return sample_fbm_hosking(0.5, GridSpec.of([0], [1], 4097), seed=21)


@then("every graph estimate lies between 0.95 and 2.05")
def graph_estimates_bounds(graph_estimates):
    for _, estimate in graph_estimates:
        assert 0.95 <= estimate.slope <= 2.05


@then("every range estimate is at most 1.05")
def range_estimates_bounds(range_estimates):
    for _, estimate in range_estimates:
        assert estimate.target is DimensionTarget.RANGE
        assert estimate.slope <= 1.05


@then("every range estimate is at most the graph estimate plus 0.1")
def range_below_graph(graph_estimates, range_estimates):
    for (_, graph), (_, range_) in zip(graph_estimates, range_estimates):
        assert range_.slope <= graph.slope + 0.1


@then("measuring its localized graph dimension at 0.5 down to the radius 2^-6 fails")
def localized_small_ball(path):
    with pytest.raises(InsufficientDataError):
        localized_dimension(path, Point.of(0.5), [2.0 ** -k for k in range(2, 7)])


@then("measuring its localized graph dimension at 2 fails")
def localized_outside(path):
    with pytest.raises(OutOfDomainError):
        localized_dimension(path, Point.of(2), RADII)


@then("measuring its localized range dimension by columns is refused")
def localized_range_columns(path):
    with pytest.raises(ValueError):
        localized_dimension(path, Point.of(0.5), RADII, target="range", counting="columns")


@then("measuring its localized graph dimension by intervals is refused")
def localized_graph_intervals(path):
    with pytest.raises(ValueError):
        localized_dimension(path, Point.of(0.5), RADII, counting="intervals")


@when(
    parsers.parse("I measure its localized graph dimension at {t0:g} on the radii 0.125 and 0.0625"),
    target_fixture="graph_estimates",
)
def measure_graph_fine(path, t0):
    return localized_dimension(path, Point.of(t0), [0.125, 0.0625])


@given(
    parsers.parse("the plane x + y sampled on a {count:d} x {count2:d} grid of the unit square"),
    target_fixture="path",
)
def plane_path(count, count2):
    grid = GridSpec.of([0, 0], [1, 1], (count, count2))
    return SamplePath(grid=grid, values=grid.points().sum(axis=1), d=1, seed=0, generator={})


@when(
    "I measure its localized graph dimension at (0.5, 0.5) on the radii 0.5 and 0.25",
    target_fixture="graph_estimates",
)
def measure_plane(path):
    return localized_dimension(path, Point.of(0.5, 0.5), [0.5, 0.25])


@then("measuring its localized graph dimension at (0.5, 0.5) on the radii 0.25 and 0.125 fails")
def localized_small_disk(path):
    # the square bounding the smaller disk holds 289 grid points, the disk 197
    with pytest.raises(InsufficientDataError):
        localized_dimension(path, Point.of(0.5, 0.5), [0.25, 0.125])


@given(
    "the generalized Weierstrass function with the profile 0.3 + 0.4t on 2^14 points",
    target_fixture="profile",
)
def gw_profile():
    return affine_profile(0.3, 0.4)


@when(
    "I measure its localized graph dimension at 0.25 on the radii 0.125 and 0.0625 for 4 seeds",
    target_fixture="graph_estimates_by_seed",
)
def measure_gw(profile):
    grid = GridSpec.of([0], [1], 2 ** 14 + 1)
    return [
        localized_dimension(sample_gw(profile, grid, seed=seed), Point.of(0.25), [0.125, 0.0625])
        for seed in range(4)
    ]


@then("the median estimate at the radius 0.0625 is 1.6 within 0.1")
def gw_median(graph_estimates_by_seed):
    finest = [estimates[-1][1].slope for estimates in graph_estimates_by_seed]
    assert float(np.median(finest)) == pytest.approx(1.6, abs=0.1)


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
