"""Module holding BDD tests for the report files as defined in ``emit.feature``."""
import csv
import json
from functools import partial

import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then, when

from gflab.domain.utils.errors import ExportError
from gflab.harness.report import emit_report

from ...entities.report.tests.fixtures import theorem_report_factory


FEATURE_FILE = "../features/emit.feature"
scenario = partial(scenario, FEATURE_FILE)


@scenario("Each format writes its files")
def test_formats():
    pass


@given(parsers.parse("a report named {name}"), target_fixture="report")
def a_report(theorem_report_factory, name):
    return theorem_report_factory(name=name)


@when(parsers.parse("the report is written as {output_format}"), target_fixture="written")
def write_report(report, tmp_path, output_format):
    return emit_report(report, tmp_path, [output_format])


@then(parsers.parse("the files {files} are written"))
def files_are_written(written, files):
    names = files.split(", ")
    assert [filename.name for filename in written] == names
    assert all(filename.is_file() for filename in written)


@then(parsers.parse("the file {first} starts with the header {header}"))
def file_starts_with(tmp_path, first, header):
    assert (tmp_path / first).read_text().splitlines()[0] == header


@scenario("The JSON file holds the whole report")
def test_json_content():
    pass


@then("the JSON file describes the report")
def json_describes_report(report, written):
    assert json.loads(written[0].read_text()) == json.loads(json.dumps(report.to_dict()))


@scenario("The CSV files have a row per check and per run")
def test_csv_content():
    pass


def _rows(filename):
    with filename.open(newline="") as file:
        return list(csv.DictReader(file))


@then("the checks file has a row per check")
def checks_rows(report, written):
    rows = _rows(written[0])
    assert [row["name"] for row in rows] == [check.name for check in report.checks]
    assert [row["verdict"] for row in rows] == [check.verdict.value for check in report.checks]


@then("the runs file has a row per run")
def runs_rows(report, written):
    rows = _rows(written[1])
    assert [row["run"] for row in rows] == [result.label for result in report.results]
    assert rows[0]["t0"] == "0.5"
    assert [row["verdict"] for row in rows] == [
        "pass" if result.passed else "fail" for result in report.results
    ]


@scenario("The directory is created when needed")
def test_new_directory():
    pass


@when(
    parsers.parse("the report is written in a new directory as {output_format}"),
    target_fixture="written",
)
def write_report_new_directory(report, tmp_path, output_format):
    written = emit_report(report, tmp_path / "new" / "reports", [output_format])
    assert written[0].parent == tmp_path / "new" / "reports"
    return written


@scenario("A report that cannot be written is refused")
def test_export_error():
    pass


@then("writing the report where a file already is fails with an export error")
def writing_fails(report, tmp_path):
    taken = tmp_path / "taken"
    taken.write_text("")
    with pytest.raises(ExportError):
        emit_report(report, taken)


@scenario("An unknown format is refused")
def test_unknown_format():
    pass


@then(parsers.parse("writing the report as {output_format} fails"))
def writing_as_fails(report, tmp_path, output_format):
    with pytest.raises(ValueError):
        emit_report(report, tmp_path, [output_format])


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
