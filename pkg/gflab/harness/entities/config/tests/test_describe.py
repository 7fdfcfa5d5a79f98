"""Module holding BDD tests for the configuration entities as defined in ``describe.feature``."""
import math
from functools import partial

import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.entities import KernelFamily
from gflab.domain.contexts.kernels.profiles import affine_profile
from gflab.domain.contexts.sampler.entities import GridSpec
from gflab.domain.utils.testing.validation import check_field, check_field_values
from gflab.harness.entities import ReportFormat, Scope, Tolerances

from .fixtures import experiment_config_factory, process_config_factory, tolerances_factory


FEATURE_FILE = "../features/describe.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("Tolerances are the slack of each kind of check")
def test_tolerances_fields():
    pass


@given("some Tolerances", target_fixture="tolerances")
def some_tolerances(tolerances_factory):
    return tolerances_factory()


@then(parsers.parse("their {field_name:w} must be a {type_name}"))
def tolerances_field_type(tolerances_factory, field_name, type_name):
    check_field_values(tolerances_factory, field_name, type_name)


@then("infinite tolerances are refused")
def tolerances_infinite(tolerances_factory):
    with pytest.raises(ValueError):
        tolerances_factory(graph=math.inf)


@scenario("Tolerances have defaults")
def test_tolerances_defaults():
    pass


@given("the default Tolerances", target_fixture="tolerances")
def the_default_tolerances():
    return Tolerances()


@then(parsers.parse("their {field_name:w} is {expected:g}"))
def tolerances_default(tolerances, field_name, expected):
    assert getattr(tolerances, field_name) == expected


@scenario("A ProcessConfig builds the kernel of its process")
def test_process_config_kernel():
    pass


@given(parsers.parse("a ProcessConfig of an fbm with H={hurst:g}"), target_fixture="process")
def a_fbm_process(process_config_factory, hurst):
    return process_config_factory(params={"H": hurst})


@then(parsers.parse("its kernel is an fbm kernel with H={hurst:g}"))
def process_fbm_kernel(process, hurst):
    kernel = process.kernel()
    assert kernel.family is KernelFamily.FBM
    assert kernel.params == {"H": hurst}


@scenario("A ProcessConfig of a profiled process needs its profile")
def test_process_config_profile():
    pass


@given("a ProcessConfig factory", target_fixture="factory")
def a_process_config_factory(process_config_factory):
    return process_config_factory


@then("a generalized Weierstrass function without profile is refused")
def process_gw_without_profile(factory):
    with pytest.raises(ValueError):
        factory(kind="gw", params={"lambda": 2.0}, profile=None)


@then("an mBm indexed by the plane is refused")
def process_mbm_in_the_plane(factory):
    with pytest.raises(ValueError):
        factory(kind="mbm", dimension=2, params={}, profile=affine_profile(0.3, 0.4))


@then("an fbm without H is refused")
def process_fbm_without_hurst(factory):
    with pytest.raises(ValueError):
        factory(params={})


@scenario("A ProcessConfig of an mBm builds the asymptotic kernel around each point")
def test_process_config_mbm_kernel():
    pass


@given("a ProcessConfig of an mBm with an affine profile", target_fixture="process")
def a_mbm_process(process_config_factory):
    return process_config_factory(kind="mbm", params={}, profile=affine_profile(0.3, 0.4))


@then(
    parsers.parse(
        "its kernel around {t0:g} is an asymptotic mBm kernel centered at {center:g}"
    )
)
def process_mbm_kernel(process, t0, center):
    kernel = process.kernel(Point.of(t0))
    assert kernel.family is KernelFamily.MBM_ASYMPTOTIC
    assert kernel.params["t0"] == center


@scenario("An ExperimentConfig describes an experiment")
def test_experiment_config_fields():
    pass


@given("an ExperimentConfig", target_fixture="config")
def an_experiment_config(experiment_config_factory):
    return experiment_config_factory()


@then(parsers.parse("it must have a field named {field_name:w}"))
def config_has_field(config, field_name):
    check_field(config, field_name)


@then(parsers.parse("its {field_name:w} must be a {type_name}"))
def config_field_type(experiment_config_factory, field_name, type_name):
    check_field_values(experiment_config_factory, field_name, type_name)


@then(parsers.parse("its {field_name:w} cannot be changed"))
def config_field_is_frozen(config, field_name):
    with pytest.raises(AttributeError):
        setattr(config, field_name, getattr(config, field_name))


@scenario("An ExperimentConfig converts the values read from JSON")
def test_experiment_config_conversions():
    pass


@given(
    "an ExperimentConfig with t0_list [0.5] and formats csv and plotdata",
    target_fixture="config",
)
def a_config_from_json_values(experiment_config_factory):
    return experiment_config_factory(t0_list=[0.5], seeds=[3], formats=["csv", "plotdata"])


@then("its t0_list is made of points")
def config_t0_points(config):
    assert config.t0_list == (Point.of(0.5),)
    assert config.seeds == (3,)


@then("its formats are report formats")
def config_formats(config):
    assert config.formats == (ReportFormat.CSV, ReportFormat.PLOTDATA)


@scenario("An ExperimentConfig refuses inconsistent experiments")
def test_experiment_config_refuses():
    pass


@given("an ExperimentConfig factory", target_fixture="factory")
def an_experiment_config_factory(experiment_config_factory):
    return experiment_config_factory


@then("an empty t0_list is refused")
def config_empty_t0_list(factory):
    with pytest.raises(ValueError):
        factory(t0_list=[])


@then("a t0 outside the grid is refused")
def config_t0_outside(factory):
    with pytest.raises(ValueError):
        factory(t0_list=[1.5])


@then("a t0 of the wrong dimension is refused")
def config_t0_wrong_dimension(factory):
    with pytest.raises(ValueError):
        factory(t0_list=[(0.5, 0.5)])


@then("an empty list of seeds is refused")
def config_no_seed(factory):
    with pytest.raises(ValueError):
        factory(seeds=[])


@then("a negative seed is refused")
def config_negative_seed(factory):
    with pytest.raises(ValueError):
        factory(seeds=[0, -1])


@then("a local scope without dimension radii is refused")
def config_local_without_radii(factory):
    with pytest.raises(ValueError):
        factory(scope=Scope.LOCAL, dimension_radii=None)
    assert factory(scope="local", dimension_radii=[0.25, 0.125]).scope is Scope.LOCAL


@then("an increasing rho_ladder is refused")
def config_increasing_ladder(factory):
    with pytest.raises(ValueError):
        factory(rho_ladder=[0.125, 0.25])


@then("a scale_ladder of 3 scales is refused")
def config_short_scale_ladder(factory):
    with pytest.raises(ValueError):
        factory(scale_ladder=[0.5, 0.25, 0.125])


@then("a grid outside the domain of the profile is refused")
def config_grid_outside_profile(factory, process_config_factory):
    process = process_config_factory(
        kind="gw", params={"lambda": 2.0}, profile=affine_profile(0.3, 0.4)
    )
    with pytest.raises(ValueError):
        factory(process=process, grid=GridSpec.of([0.0], [2.0], 1025))


@then("an empty list of formats is refused")
def config_no_format(factory):
    with pytest.raises(ValueError):
        factory(formats=[])


@scenario("An ExperimentConfig can be changed into a new one")
def test_experiment_config_evolve():
    pass


@when(parsers.parse("it is evolved with the seeds {seed:d}"), target_fixture="new_config")
def evolve_config(config, seed):
    return config.evolve(seeds=(seed,))


@then(parsers.parse("the new config has the seeds {seed:d}"))
def new_config_seeds(new_config, seed):
    assert new_config.seeds == (seed,)


@then("the other fields are unchanged")
def new_config_other_fields(config, new_config):
    assert new_config.name == config.name
    assert new_config.grid == config.grid
    assert new_config.tolerances == config.tolerances


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
