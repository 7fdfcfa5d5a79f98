"""Module holding BDD tests for the repository of presets as defined in ``storage.feature``."""
from functools import partial

import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.contexts.geometry.entities import Point
from gflab.harness.entities import Scope
from gflab.harness.presets import InMemoryPresetRepository, default_presets

from ...entities.preset.tests.fixtures import preset_factory


FEATURE_FILE = "../features/storage.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("A new preset can be saved and retrieved")
def test_add_new_preset():
    pass


@given("a preset", target_fixture="preset")
def a_preset(preset_factory):
    return preset_factory()


@given("a preset storage", target_fixture="preset_storage")
def a_preset_storage():
    return InMemoryPresetRepository()


@when("the preset is added to the preset storage")
def add_preset(preset, preset_storage):
    preset_storage.add(preset)


@then("I can retrieve it")
def retrieve_new_preset(preset, preset_storage):
    assert preset_storage.exists(preset.name)
    from_storage = preset_storage.get(preset.name)
    assert from_storage == preset
    assert preset_storage.names() == [preset.name]


@scenario("An existing preset cannot be added")
def test_add_existing_preset():
    pass


@then("it's not possible to add it again")
def cannot_add_existing_preset(preset, preset_storage):
    with pytest.raises(preset_storage.UniquenessError):
        preset_storage.add(preset)


@scenario("A missing preset cannot be found")
def test_get_missing_preset():
    pass


@then("looking for it fails")
def cannot_get_missing_preset(preset, preset_storage):
    assert not preset_storage.exists(preset.name)
    with pytest.raises(preset_storage.NotFoundError):
        preset_storage.get(preset.name)


@scenario("The shipped presets cover every process")
def test_shipped_presets():
    pass


@given("the shipped presets", target_fixture="shipped_presets")
def the_shipped_presets():
    return default_presets()


@then(parsers.parse("they are named {names}"))
def shipped_preset_names(shipped_presets, names):
    assert shipped_presets.names() == names.split(", ")


@then("each one runs the experiment of its name")
def shipped_preset_configs(shipped_presets):
    for name in shipped_presets.names():
        assert shipped_presets.get(name).config.name == name


@then(parsers.parse("the preset {name} samples {size:d} points with {seeds:d} seeds"))
def shipped_preset_size(shipped_presets, name, size, seeds):
    config = shipped_presets.get(name).config
    assert config.grid.size == size
    assert len(config.seeds) == seeds


@then(parsers.parse("the preset {name} allows {tolerance:g} on the graph dimension"))
def shipped_preset_tolerance(shipped_presets, name, tolerance):
    assert shipped_presets.get(name).config.tolerances.graph == tolerance


@then(parsers.parse("the preset {name} measures dimensions around {first:g} and {second:g}"))
def shipped_preset_local(shipped_presets, name, first, second):
    config = shipped_presets.get(name).config
    assert config.scope is Scope.LOCAL
    assert config.t0_list == (Point.of(first), Point.of(second))


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
