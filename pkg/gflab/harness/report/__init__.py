"""Writing theorem reports to files.

- ``json``: the whole report in ``<name>.report.json``
- ``csv``: the checks in ``<name>.checks.csv`` and one row per run in ``<name>.runs.csv``
- ``plotdata``: the tables behind the usual plots, ``<name>.loglog.csv`` for the log-log box
  counting fits, ``<name>.trend.csv`` for the localized dimensions along the radii and
  ``<name>.ratios.csv`` for the exponent ratios along the radii

Plots themselves are not drawn.

"""
import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Union

from gflab.domain.contexts.exponents.entities.estimate import encode_real
from gflab.domain.utils.errors import ExportError

from ..entities import ReportFormat, TheoremReport, Verdict
from ..entities.report import point_label


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _write_rows(filename: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    try:
        with filename.open("w", newline="") as file:
            writer = csv.writer(file)
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    logger.debug("Wrote %s", filename)
    return filename


def _write_json(report: TheoremReport, out_dir: Path) -> List[Path]:
    filename = out_dir / f"{report.name}.report.json"
    try:
        filename.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    logger.debug("Wrote %s", filename)
    return [filename]


def _write_csv(report: TheoremReport, out_dir: Path) -> List[Path]:
    checks = _write_rows(
        out_dir / f"{report.name}.checks.csv",
        ["name", "measured", "low", "high", "tolerance", "verdict"],
        (
            [
                check.name,
                encode_real(check.measured),
                encode_real(check.low),
                encode_real(check.high),
                check.tolerance,
                check.verdict.value,
            ]
            for check in report.checks
        ),
    )
    runs = _write_rows(
        out_dir / f"{report.name}.runs.csv",
        [
            "run",
            "seed",
            "t0",
            "alpha_tilde",
            "alpha_under",
            "graph_low",
            "graph_high",
            "graph_dimension",
            "range_low",
            "range_high",
            "range_dimension",
            "verdict",
        ],
        (
            [
                result.label,
                result.seed,
                "" if result.t0 is None else point_label(result.t0),
                result.alpha_tilde,
                encode_real(result.alpha_under),
                *(encode_real(bound) for bound in result.graph_bounds),
                result.graph_dimension.slope,
                *(encode_real(bound) for bound in result.range_bounds),
                result.range_dimension.slope,
                (Verdict.PASS if result.passed else Verdict.FAIL).value,
            ]
            for result in report.results
        ),
    )
    return [checks, runs]


def _write_plotdata(report: TheoremReport, out_dir: Path) -> List[Path]:
    loglog = _write_rows(
        out_dir / f"{report.name}.loglog.csv",
        ["run", "target", "log_inverse_scale", "log_count", "in_window"],
        (
            [result.label, target, -math.log(scale), math.log(count), int(in_window)]
            for result in report.results
            for target, estimate in (
                ("graph", result.graph_dimension),
                ("range", result.range_dimension),
            )
            for scale, count, in_window in estimate.rows()
            if count > 0
        ),
    )
    trend = _write_rows(
        out_dir / f"{report.name}.trend.csv",
        ["run", "rho", "graph_dimension", "range_dimension"],
        ([result.label, *row] for result in report.results for row in result.trend),
    )
    ratios = _write_rows(
        out_dir / f"{report.name}.ratios.csv",
        ["run", "t0", "rho", "inf_ratio", "sup_ratio"],
        (
            [result.label, point_label(estimate.t0), rho, low, encode_real(high)]
            for result in report.results
            for estimate in result.exponents
            for rho, low, high in zip(estimate.rho_ladder, estimate.inf_ratio, estimate.sup_ratio)
        ),
    )
    return [loglog, trend, ratios]


_WRITERS = {
    ReportFormat.JSON: _write_json,
    ReportFormat.CSV: _write_csv,
    ReportFormat.PLOTDATA: _write_plotdata,
}


def emit_report(
    report: TheoremReport,
    out_dir: PathLike,
    formats: Iterable[Union[ReportFormat, str]] = (ReportFormat.JSON,),
) -> List[Path]:
    """Write `report` in `out_dir`, in each of the `formats`.

    The directory is created if needed.

    Returns
    -------
    List[Path]
        The written files, in the order of the formats.

    Raises
    ------
    ExportError
        If the directory or a file cannot be written.
    ValueError
        If a format is unknown.

    """
    out_dir = Path(out_dir)
    formats = [ReportFormat(output_format) for output_format in formats]
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exception:
        raise ExportError(str(exception), context=str(out_dir)) from exception
    written: List[Path] = []
    for output_format in formats:
        written.extend(_WRITERS[output_format](report, out_dir))
    logger.info("Wrote the report of %s to %d file(s) in %s", report.name, len(written), out_dir)
    return written
