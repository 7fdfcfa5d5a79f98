"""Command line interface of gflab.

Every command runs on an experiment given either as a JSON configuration (``--config``) or as
the name of a shipped preset (``--preset``). The exit code is 0 on success, 1 when a check
fails, 2 for an invalid configuration and 3 when a path is too large to sample, a covariance
cannot be factorized or a file cannot be written.

"""
import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Iterator, Optional, Tuple

import click

from gflab.domain.contexts.sampler.export import write_binary, write_csv
from gflab.domain.utils.errors import (
    BudgetExceededError,
    ConfigError,
    ExportError,
    GflabError,
    NotPositiveDefiniteError,
)
from gflab.domain.utils.repository import NotFoundError

from .config import load_config, with_overrides
from .entities import ExperimentConfig, ReportFormat, Scope, TheoremReport
from .entities.report import point_label
from .experiment import estimate_exponents, measure_dimensions, run_experiment, sample_paths
from .presets import default_presets
from .report import emit_report


logger = logging.getLogger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_BUDGET_OR_IO_ERROR = 3

_FORMATS = [output_format.value for output_format in ReportFormat]


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Turn the errors of a command into its exit code.

    The other errors of gflab come from measures the configuration asks for and the grid cannot
    give, such as a ball holding too few points: they are configuration errors too. Any other
    exception is a bug and is not caught.

    """
    context = click.get_current_context()
    try:
        yield
    except (BudgetExceededError, NotPositiveDefiniteError, ExportError, OSError) as exception:
        click.echo(f"Error: {exception}", err=True)
        context.exit(EXIT_BUDGET_OR_IO_ERROR)
    except (GflabError, NotFoundError) as exception:
        click.echo(f"Error: {exception}", err=True)
        context.exit(EXIT_CONFIG_ERROR)


def experiment_options(function: Callable[..., Any]) -> Callable[..., Any]:
    """Add the options selecting the experiment of a command."""
    options = [
        click.option(
            "--config",
            "config_file",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="JSON configuration of the experiment.",
        ),
        click.option("--preset", help="Name of a shipped preset, see `gflab presets`."),
        click.option("--seed", type=click.IntRange(min=0), help="Run this seed only."),
        click.option(
            "--out",
            type=click.Path(file_okay=False, path_type=Path),
            help="Directory the files are written to.",
        ),
        click.option(
            "--format",
            "formats",
            type=click.Choice(_FORMATS),
            multiple=True,
            help="Format of the report, may be repeated.",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def _experiment(
    config_file: Optional[Path],
    preset: Optional[str],
    seed: Optional[int],
    out: Optional[Path],
    formats: Tuple[str, ...],
) -> ExperimentConfig:
    if (config_file is None) == (preset is None):
        raise ConfigError("exactly one of --config and --preset is needed", context="cli")
    if config_file is not None:
        config = load_config(config_file)
    else:
        assert preset is not None
        config = default_presets().get(preset).config
    return with_overrides(config, seed=seed, out_dir=out, formats=formats or None)


def _out_dir(config: ExperimentConfig) -> Path:
    return Path(config.out_dir) if config.out_dir else Path(".")


def _write_json(filename: Path, document: Any) -> None:
    try:
        filename.parent.mkdir(parents=True, exist_ok=True)
        filename.write_text(json.dumps(document, indent=2))
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    click.echo(f"Wrote {filename}")


def _echo_report(report: TheoremReport) -> None:
    for check in report.checks:
        click.echo(
            f"{check.verdict.value.upper():4}  {check.name:24}  {check.measured:.4f}  "
            f"in [{check.low:.4f}, {check.high:.4f}] ± {check.tolerance:g}"
        )
    passed = len(report.checks) - len(report.failures)
    click.echo(f"{report.name}: {passed}/{len(report.checks)} check(s) passed")
    run_failures = report.run_failures
    if run_failures:
        runs = sorted({label for label, _ in run_failures})
        click.echo(f"{len(run_failures)} check(s) failed on single runs: {', '.join(runs)}")


@click.group()
@click.option("-v", "--verbose", count=True, help="More messages, may be repeated.")
@click.option("-q", "--quiet", is_flag=True, help="Only the errors.")
def main(verbose: int, quiet: bool) -> None:
    """Local regularity and fractal dimensions of Gaussian random fields."""
    levels = (logging.WARNING, logging.INFO, logging.DEBUG)
    level = logging.ERROR if quiet else levels[min(verbose, 2)]
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


@main.command()
def presets() -> None:
    """List the shipped presets."""
    repository = default_presets()
    for name in repository.names():
        click.echo(f"{name:12}  {repository.get(name).description}")


@main.command()
@experiment_options
@click.option(
    "--path-format",
    type=click.Choice(["binary", "csv"]),
    default="binary",
    show_default=True,
    help="Format of the sample path files.",
)
def simulate(path_format: str, **options: Any) -> None:
    """Draw the path of each seed and write it to a file."""
    with _exit_codes():
        config = _experiment(**options)
        out_dir = _out_dir(config)
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exception:
            raise ExportError(str(exception), context=str(out_dir)) from exception
        for path in sample_paths(config):
            if path_format == "csv":
                filename = write_csv(path, out_dir / f"{config.name}.seed{path.seed}.csv")
            else:
                filename = write_binary(path, out_dir / f"{config.name}.seed{path.seed}.gfl")
            click.echo(f"Wrote {filename}")


@main.command()
@experiment_options
def exponent(**options: Any) -> None:
    """Estimate the exponent and sub-exponent of the kernel at each point and seed."""
    with _exit_codes():
        config = _experiment(**options)
        estimates = [
            estimate_exponents(config, t0, seed) for seed in config.seeds for t0 in config.t0_list
        ]
        for estimate in estimates:
            click.echo(
                f"t0={point_label(estimate.t0)}  alpha_tilde={estimate.alpha_tilde_hat:.6f}  "
                f"alpha_under={estimate.alpha_under_hat:.6f}  rho={estimate.rho:g}"
            )
        if config.out_dir:
            _write_json(
                _out_dir(config) / f"{config.name}.exponents.json",
                [estimate.to_dict() for estimate in estimates],
            )


@main.command()
@experiment_options
def dimension(**options: Any) -> None:
    """Measure the dimensions of the graph and of the range of the path of each seed."""
    with _exit_codes():
        config = _experiment(**options)
        centers = config.t0_list if config.scope is Scope.LOCAL else (None,)
        documents = []
        for path in sample_paths(config):
            for t0 in centers:
                graph, range_, trend = measure_dimensions(config, path, t0)
                where = "whole path" if t0 is None else f"t0={point_label(t0)}"
                click.echo(
                    f"seed={path.seed}  {where}  graph={graph.slope:.4f}  range={range_.slope:.4f}"
                )
                documents.append(
                    {
                        "seed": path.seed,
                        "t0": None if t0 is None else list(t0.coords),
                        "graph": graph.to_dict(),
                        "range": range_.to_dict(),
                        "trend": [list(row) for row in trend],
                    }
                )
        if config.out_dir:
            _write_json(_out_dir(config) / f"{config.name}.dimensions.json", documents)


@main.command()
@experiment_options
def verify(**options: Any) -> None:
    """Run the experiment and check the dimensions against the predicted bounds."""
    with _exit_codes():
        config = _experiment(**options)
        report = run_experiment(config)
        _echo_report(report)
        if config.out_dir:
            for filename in emit_report(report, config.out_dir, config.formats):
                click.echo(f"Wrote {filename}")
    if not report.passed:
        click.get_current_context().exit(EXIT_CHECK_FAILED)


@main.command()
@experiment_options
def report(**options: Any) -> None:
    """Run the experiment and write its report, in the current directory by default."""
    with _exit_codes():
        config = _experiment(**options)
        theorem_report = run_experiment(config)
        _echo_report(theorem_report)
        for filename in emit_report(theorem_report, _out_dir(config), config.formats):
            click.echo(f"Wrote {filename}")
