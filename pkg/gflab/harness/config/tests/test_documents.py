"""Module holding BDD tests for the JSON configurations as defined in ``documents.feature``."""
import json
from functools import partial

import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.utils.errors import ConfigError
from gflab.harness.config import config_from_dict, config_to_dict, load_config, with_overrides
from gflab.harness.entities import ReportFormat
from gflab.harness.presets import default_presets

from ...entities.config.tests.fixtures import experiment_config_factory


FEATURE_FILE = "../features/documents.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("The shipped presets survive a trip through JSON")
def test_presets_round_trip():
    pass


@given("the shipped presets", target_fixture="presets")
def the_shipped_presets():
    return default_presets()


@then("each preset is unchanged once written and read back as JSON")
def presets_unchanged(presets):
    for name in presets.names():
        document = config_to_dict(presets.get(name).config)
        read_back = config_from_dict(json.loads(json.dumps(document)))
        assert config_to_dict(read_back) == document


@scenario("A configuration file is loaded")
def test_load_config():
    pass


@given("a configuration written to a JSON file", target_fixture="config_file")
def config_file(tmp_path, experiment_config_factory):
    config = experiment_config_factory()
    filename = tmp_path / f"{config.name}.json"
    filename.write_text(json.dumps(config_to_dict(config)))
    return config, filename


@when("the file is loaded", target_fixture="loaded")
def load_the_file(config_file):
    return load_config(config_file[1])


@then("the loaded configuration is the written one")
def loaded_is_written(config_file, loaded):
    assert config_to_dict(loaded) == config_to_dict(config_file[0])


@scenario("Another schema version is refused")
def test_unsupported_schema():
    pass


@given("the document of a configuration", target_fixture="document")
def config_document(experiment_config_factory):
    return config_to_dict(experiment_config_factory())


@when(parsers.parse("its schema is set to {schema:d}"))
def set_schema(document, schema):
    document["schema"] = schema


@then("reading the document fails with a configuration error")
def reading_fails(document):
    with pytest.raises(ConfigError):
        config_from_dict(document)


@scenario("A document missing a key is refused")
def test_missing_key():
    pass


@when(parsers.parse("its key {key} is removed"))
def remove_key(document, key):
    del document[key]


@scenario("A document describing an invalid configuration is refused")
def test_invalid_document():
    pass


@when("its list of points is emptied")
def empty_points(document):
    document["t0_list"] = []


@scenario("A file that is not JSON is refused")
def test_not_json():
    pass


@given("a file holding something else than JSON", target_fixture="bad_file")
def bad_file(tmp_path):
    filename = tmp_path / "broken.json"
    filename.write_text("{'schema': 1,")
    return filename


@then("loading the file fails with a configuration error")
def loading_fails(bad_file):
    with pytest.raises(ConfigError):
        load_config(bad_file)


@scenario("The command line overrides some values")
def test_overrides():
    pass


@given("a configuration", target_fixture="config")
def a_configuration(experiment_config_factory):
    return experiment_config_factory()


@when(parsers.parse("its seed is overridden by {seed:d}"), target_fixture="config")
def override_seed(config, seed):
    return with_overrides(config, seed=seed)


@when(
    parsers.parse('its output directory is overridden by "{out_dir}"'), target_fixture="config"
)
def override_out_dir(config, out_dir):
    return with_overrides(config, out_dir=out_dir)


@when(parsers.parse("its formats are overridden by {output_format}"), target_fixture="config")
def override_formats(config, output_format):
    return with_overrides(config, formats=[output_format])


@then(parsers.parse("the configuration has the seeds {seed:d}"))
def config_has_seeds(config, seed):
    assert config.seeds == (seed,)


@then(parsers.parse('the configuration writes {output_format} files in "{out_dir}"'))
def config_writes(config, output_format, out_dir):
    assert config.formats == (ReportFormat(output_format),)
    assert config.out_dir == out_dir


@scenario("An invalid override is refused")
def test_invalid_override():
    pass


@then(parsers.parse("overriding its seed by {seed:d} fails with a configuration error"))
def overriding_fails(config, seed):
    with pytest.raises(ConfigError):
        with_overrides(config, seed=seed)


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
