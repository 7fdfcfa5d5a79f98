"""Module holding BDD tests for the shipped presets as defined in ``acceptance.feature``."""
from functools import partial

import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.harness.experiment import estimate_exponents, run_experiment
from gflab.harness.presets import default_presets
from gflab.harness.theorems import expected_exponents


FEATURE_FILE = "../features/acceptance.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("A shipped preset passes all its checks")
def test_preset_passes():
    pass


@given(parsers.parse("the shipped preset {name}"), target_fixture="preset")
def shipped_preset(name):
    return default_presets().get(name)


@when("its experiment is run", target_fixture="report")
def run_preset(preset):
    return run_experiment(preset.config)


@then("all its checks pass")
def all_checks_pass(report):
    assert report.passed, [check.to_dict() for check in report.failures]


@scenario("The exponents of a Weierstrass preset converge on its ladder of radii")
def test_preset_exponents():
    pass


@then("its estimated exponents at each point are its expected exponents within 0.05")
def preset_exponents(preset):
    config = preset.config
    for t0 in config.t0_list:
        expected = expected_exponents(config.process, t0)
        assert expected is not None
        estimate = estimate_exponents(config, t0, config.seeds[0])
        assert estimate.alpha_tilde_hat == pytest.approx(expected[0], abs=0.05)
        assert estimate.alpha_under_hat == pytest.approx(expected[1], abs=0.05)


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
