"""Module holding BDD tests for the Riesz energies and the Frostman criterion as defined in ``energy.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.contexts.fractal.clouds import graph_cloud
from gflab.domain.contexts.fractal.energy import (
    deduplicate,
    frostman_probe,
    measure_riesz_energy,
    riesz_energy,
)
from gflab.domain.contexts.fractal.entities import PointCloud
from gflab.domain.contexts.sampler.entities import GridSpec
from gflab.domain.contexts.sampler.gaussian import sample_fbm_hosking
from gflab.domain.utils.errors import InsufficientDataError


FEATURE_FILE = "../features/energy.feature"
scenario = partial(scenario, FEATURE_FILE)

FINE_BETAS = [round(0.05 * k, 2) for k in range(1, 31)]


@scenario("The energy of two points at distance 1")
def test_two_points():
    pass


@given("the two points 0 and 1 of the line", target_fixture="cloud")
def two_points():
    return PointCloud(dim=1, points=[0.0, 1.0])


@then(parsers.parse("its energy of exponent {beta:g} is 0.5"))
def energy_is_half(cloud, beta):
    assert riesz_energy(cloud, beta) == pytest.approx(0.5)


@scenario("Energies scale with the cloud")
def test_scaling():
    pass


@given("200 random points of the square [0, 0.5]^2", target_fixture="cloud")
def small_square():
    return PointCloud(dim=2, points=np.random.default_rng(5).uniform(0, 0.5, size=(200, 2)))


@then("scaling it by 3 divides its energy of exponent 0.7 by 3^0.7")
def energy_scaling(cloud):
    scaled = PointCloud(dim=cloud.dim, points=3 * cloud.points)
    assert riesz_energy(scaled, 0.7) == pytest.approx(
        riesz_energy(cloud, 0.7) * 3 ** -0.7, rel=1e-9
    )


@scenario("The energy of a tiny exponent counts the pairs of points")
def test_tiny_exponent():
    pass


@then("its energy of exponent 1e-9 is the share of the pairs of distinct points")
def energy_tiny_exponent(cloud):
    size = cloud.size
    assert riesz_energy(cloud, 1e-9) == pytest.approx((size ** 2 - size) / size ** 2, rel=1e-6)


@scenario("Energies grow with the exponent when the cloud is small")
def test_monotone():
    pass


@then(parsers.parse("its energies of exponents {betas} do not decrease"))
def energy_monotone(cloud, betas):
    energies = [riesz_energy(cloud, float(beta)) for beta in betas.split()]
    assert energies == sorted(energies)


@scenario("Duplicate points are left out of the energy")
def test_duplicates():
    pass


@given("the points 0, 0 and 1 of the line", target_fixture="cloud")
def duplicated_points():
    return PointCloud(dim=1, points=[0.0, 0.0, 1.0])


@then(parsers.parse("{count:d} point is a duplicate"))
def duplicate_count(cloud, count):
    kept, left_out = deduplicate(cloud.points)
    assert left_out == count
    assert len(kept) == cloud.size - count


@then(
    parsers.parse(
        "its energy of exponent {beta:g} is measured on {size:d} points "
        "with {duplicates:d} duplicate left out"
    )
)
def energy_counts_duplicates(cloud, beta, size, duplicates):
    energy = measure_riesz_energy(cloud, beta)
    assert (energy.size, energy.duplicates) == (size, duplicates)
    assert energy.energy == riesz_energy(cloud, beta)
    assert energy.to_dict()["duplicates"] == duplicates


@scenario("A cloud of a single point has no energy")
def test_single_point():
    pass


@given("the point 0.5 of the line", target_fixture="cloud")
def single_point():
    return PointCloud(dim=1, points=[0.5])


@then("measuring its energy of exponent 1 fails")
def single_point_energy(cloud):
    with pytest.raises(InsufficientDataError):
        riesz_energy(cloud, 1.0)


@scenario("The Frostman criterion of a segment")
def test_frostman_segment():
    pass


@given("the unit segment sampled on 2048 points", target_fixture="cloud")
def unit_segment():
    return PointCloud(dim=1, points=np.linspace(0, 1, 2048))


@when(
    "I measure its energies across refinements of exponents 0.05 to 1.5 over 2 refinements",
    target_fixture="report",
)
def frostman_fine(cloud):
    return frostman_probe(cloud, FINE_BETAS, refinement_levels=2)


@then(parsers.parse("the largest stable exponent is between {low:g} and {high:g}"))
def stable_between(report, low, high):
    assert report.stable_max_beta is not None
    assert low <= report.stable_max_beta <= high


@then("the refinements have 1024 and 2048 points")
def refinement_sizes(report):
    assert report.level_sizes == (1024, 2048)


@then(parsers.parse("the energies at {beta:g} are not stable"))
def unstable_at(report, beta):
    assert report.growth[report.betas.index(beta)] >= 1 + report.threshold


@scenario("The Frostman criterion of a cluster of duplicates")
def test_frostman_cluster():
    pass


@given("64 points of the line within 1e-12 of 0.5", target_fixture="cloud")
def cluster():
    return PointCloud(dim=1, points=[0.5 + 1e-14 * k for k in range(64)])


@then("no exponent is stable")
def nothing_stable(report):
    assert report.stable_max_beta is None


@then(parsers.parse("{count:d} points of the finest refinement are duplicates"))
def finest_duplicates(report, count):
    assert report.duplicates == count


@scenario("The Frostman criterion needs two refinements")
def test_frostman_levels():
    pass


@then("probing its energies over 1 refinement fails")
def frostman_single_level(cloud):
    with pytest.raises(InsufficientDataError):
        frostman_probe(cloud, refinement_levels=1)


@scenario("The Frostman criterion of the graph of a Brownian motion")
def test_frostman_brownian():
    pass


@given(
    "the graph of a Brownian motion sampled on 2^14 points of [0, 1]",
    target_fixture="cloud",
)
def brownian_graph():
    grid = GridSpec.of([0], [1], 2 ** 14 + 1)
    return graph_cloud(sample_fbm_hosking(0.5, grid, seed=8))


@when("I measure its energies across refinements over 3 refinements", target_fixture="report")
def frostman_default(cloud):
    return frostman_probe(cloud, refinement_levels=3)


@then(parsers.parse("the largest stable exponent is at least {low:g}"))
def stable_at_least(report, low):
    assert report.stable_max_beta is not None
    assert report.stable_max_beta >= low


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
