"""Running experiments: sampling the paths, estimating exponents and dimensions, checking them.

All the randomness of an experiment comes from its seeds: the path of a seed and the pairs of
the exponent estimations are drawn from streams derived from it, so running the same
configuration again gives the same report, number for number, whatever the number of workers.

"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from gflab.domain.contexts.exponents.entities import ExponentEstimate
from gflab.domain.contexts.exponents.entities.estimate import encode_real
from gflab.domain.contexts.exponents.estimation import kernel_exponents
from gflab.domain.contexts.fractal.counting import (
    graph_box_dimension,
    localized_dimension,
    range_box_dimension,
)
from gflab.domain.contexts.fractal.entities import DimensionEstimate, DimensionTarget
from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.families import DEFAULT_FREQ_BINS
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.contexts.sampler.gaussian import (
    EXACT_FACTORIZATION_BUDGET,
    sample_fbm_hosking,
    sample_gaussian_exact,
)
from gflab.domain.contexts.sampler.series import sample_gw, sample_mbm_spectral
from gflab.domain.utils.errors import ConfigError

from ..config import config_to_dict
from ..entities import (
    Check,
    ExperimentConfig,
    ProcessConfig,
    ProcessKind,
    RunResult,
    Scope,
    TheoremReport,
)
from ..entities.report import point_label
from ..theorems import expected_exponents, predicted_bounds


logger = logging.getLogger(__name__)

#: Slack of the check that the estimated exponent is at most the estimated sub-exponent.
ORDERING_TOLERANCE = 1e-6

#: Key of the aggregates of a global experiment.
GLOBAL_KEY = "global"

_T = TypeVar("_T")
_R = TypeVar("_R")


def sample_process(process: ProcessConfig, grid: GridSpec, d: int, seed: int) -> SamplePath:
    """Draw a path of `process` on `grid`.

    The fractional Brownian motion is drawn exactly by factorizing its covariance up to
    :obj:`EXACT_FACTORIZATION_BUDGET` points, and with the sequential sampler beyond. The MpfBm
    is always drawn exactly, the generalized Weierstrass function from its series and the mBm
    from its spectral discretization.

    Raises
    ------
    BudgetExceededError
        If a Gaussian field has too many points to be drawn exactly, and no other sampler applies.

    Examples
    --------
    >>> process = ProcessConfig(kind="fbm", params={"H": 0.5})
    >>> path = sample_process(process, GridSpec.of([0], [1], 9), 1, 3)
    >>> path.values.shape, path.generator["method"]
    ((9, 1), 'cholesky')

    """
    params = process.params
    if process.kind is ProcessKind.FBM:
        lower = grid.domain.lower.coords
        if grid.size > EXACT_FACTORIZATION_BUDGET and grid.dimension == 1 and lower[0] == 0:
            return sample_fbm_hosking(params["H"], grid, d, seed)
        return sample_gaussian_exact(process.kernel(), grid, d, seed)
    if process.kind is ProcessKind.MPFBM:
        return sample_gaussian_exact(process.kernel(), grid, d, seed)
    assert process.profile is not None
    if process.kind is ProcessKind.GW:
        return sample_gw(
            process.profile,
            grid,
            lam=params.get("lambda", 2.0),
            truncation=None if params.get("J") is None else int(params["J"]),
            d=d,
            seed=seed,
        )
    return sample_mbm_spectral(
        process.profile,
        grid,
        d=d,
        seed=seed,
        freq_cutoff=params.get("freq_cutoff"),
        freq_bins=int(params.get("freq_bins", DEFAULT_FREQ_BINS)),
    )


def _map(workers: int, function: Callable[[_T], _R], items: Iterable[_T]) -> List[_R]:
    """Apply `function` to `items` on `workers` threads, keeping the order of `items`."""
    items = list(items)
    if workers == 1 or len(items) < 2:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))


def sample_paths(config: ExperimentConfig) -> List[SamplePath]:
    """Draw the path of each seed of `config`, in the order of the seeds."""
    return _map(
        config.workers,
        lambda seed: sample_process(config.process, config.grid, config.d, seed),
        config.seeds,
    )


def estimate_exponents(config: ExperimentConfig, t0: Point, seed: int) -> ExponentEstimate:
    """Estimate the exponents of the kernel of the process of `config` at `t0`."""
    return kernel_exponents(
        config.process.kernel(t0),
        t0,
        rho_ladder=config.rho_ladder,
        pairs_per_rho=config.pairs_per_rho,
        seed=seed,
    )


def _bounded_exponents(alpha_tilde: float, alpha_under: float) -> Tuple[float, float]:
    # estimates may cross by less than the ordering slack
    return alpha_tilde, max(alpha_under, alpha_tilde)


def measure_dimensions(
    config: ExperimentConfig, path: SamplePath, t0: Optional[Point] = None
) -> Tuple[DimensionEstimate, DimensionEstimate, List[Tuple[float, float, float]]]:
    """Measure the dimensions of the graph and of the range of `path`.

    With a `t0`, they are measured in the balls of :obj:`ExperimentConfig.dimension_radii`
    around it and the estimates at the finest radius are returned, with the ``(ρ, graph, range)``
    trend along the radii. Without, they are measured on the whole path and the trend is empty.

    """
    if t0 is None:
        graph = graph_box_dimension(path, config.scale_ladder)
        return graph, range_box_dimension(path, config.scale_ladder), []
    if config.dimension_radii is None:
        raise ConfigError(
            "measuring dimensions around a point needs dimension_radii", context="config"
        )
    graphs = localized_dimension(
        path, t0, config.dimension_radii, DimensionTarget.GRAPH, config.scale_ladder
    )
    ranges = localized_dimension(
        path, t0, config.dimension_radii, DimensionTarget.RANGE, config.scale_ladder
    )
    trend = [
        (rho, graph.slope, range_.slope) for (rho, graph), (_, range_) in zip(graphs, ranges)
    ]
    return graphs[-1][1], ranges[-1][1], trend


def _local_run(config: ExperimentConfig, path: SamplePath, t0: Point) -> RunResult:
    estimate = estimate_exponents(config, t0, path.seed)
    alpha_tilde, alpha_under = _bounded_exponents(
        estimate.alpha_tilde_hat, estimate.alpha_under_hat
    )
    bounds = predicted_bounds(alpha_tilde, alpha_under, config.grid.dimension, config.d)
    graph, range_, trend = measure_dimensions(config, path, t0)
    key = point_label(t0)
    return RunResult(
        seed=path.seed,
        t0=t0,
        exponents=(estimate,),
        alpha_tilde=alpha_tilde,
        alpha_under=alpha_under,
        graph_bounds=bounds["graph"],
        range_bounds=bounds["range"],
        graph_dimension=graph,
        range_dimension=range_,
        trend=trend,
        checks=[
            *_dimension_checks(
                config, key, graph.slope, range_.slope, bounds["graph"], bounds["range"]
            ),
            *_exponent_checks(
                config, t0, estimate.alpha_tilde_hat, estimate.alpha_under_hat
            ),
        ],
    )


def _global_run(config: ExperimentConfig, path: SamplePath) -> RunResult:
    estimates = tuple(estimate_exponents(config, t0, path.seed) for t0 in config.t0_list)
    alpha_tilde, alpha_under = _bounded_exponents(
        min(estimate.alpha_tilde_hat for estimate in estimates),
        min(estimate.alpha_under_hat for estimate in estimates),
    )
    bounds = predicted_bounds(alpha_tilde, alpha_under, config.grid.dimension, config.d)
    graph, range_, _ = measure_dimensions(config, path)
    checks = _dimension_checks(
        config, GLOBAL_KEY, graph.slope, range_.slope, bounds["graph"], bounds["range"]
    )
    for t0, estimate in zip(config.t0_list, estimates):
        checks.extend(
            _exponent_checks(config, t0, estimate.alpha_tilde_hat, estimate.alpha_under_hat)
        )
    return RunResult(
        seed=path.seed,
        t0=None,
        exponents=estimates,
        alpha_tilde=alpha_tilde,
        alpha_under=alpha_under,
        graph_bounds=bounds["graph"],
        range_bounds=bounds["range"],
        graph_dimension=graph,
        range_dimension=range_,
        checks=checks,
    )


def _median(values: Sequence[float]) -> float:
    return float(np.median(np.asarray(values, dtype=float)))


def _aggregate(config: ExperimentConfig, results: Sequence[RunResult]) -> Dict[str, Any]:
    """Return the medians of the runs over the seeds, and the bounds predicted from them."""
    alpha_tilde = _median([result.alpha_tilde for result in results])
    alpha_under = max(_median([result.alpha_under for result in results]), alpha_tilde)
    bounds = predicted_bounds(alpha_tilde, alpha_under, config.grid.dimension, config.d)
    return {
        "runs": len(results),
        "alpha_tilde": alpha_tilde,
        "alpha_under": alpha_under,
        "graph_dimension": _median([result.graph_dimension.slope for result in results]),
        "range_dimension": _median([result.range_dimension.slope for result in results]),
        "graph_bounds": bounds["graph"],
        "range_bounds": bounds["range"],
    }


def _dimension_checks(
    config: ExperimentConfig,
    key: str,
    graph: float,
    range_: float,
    graph_bounds: Tuple[float, float],
    range_bounds: Tuple[float, float],
) -> List[Check]:
    tolerances = config.tolerances
    graph_low, graph_high = graph_bounds
    range_low, range_high = range_bounds
    return [
        Check(
            name=f"graph@{key}",
            measured=graph,
            low=graph_low,
            high=graph_high,
            tolerance=tolerances.graph,
        ),
        Check(
            name=f"range@{key}",
            measured=range_,
            low=range_low,
            high=range_high,
            tolerance=tolerances.range,
        ),
        Check(
            name=f"projection@{key}",
            measured=range_,
            low=0.0,
            high=graph,
            tolerance=tolerances.projection,
        ),
    ]


def _exponent_checks(
    config: ExperimentConfig, t0: Point, alpha_tilde: float, alpha_under: float
) -> List[Check]:
    key = point_label(t0)
    checks = [
        Check(
            name=f"ordering@{key}",
            measured=alpha_tilde,
            low=0.0,
            high=alpha_under,
            tolerance=ORDERING_TOLERANCE,
        )
    ]
    expected = expected_exponents(config.process, t0)
    if expected is not None:
        for name, measured, value in zip(
            ("alpha_tilde", "alpha_under"), (alpha_tilde, alpha_under), expected
        ):
            checks.append(
                Check(
                    name=f"{name}@{key}",
                    measured=measured,
                    low=value,
                    high=value,
                    tolerance=config.tolerances.exponent,
                )
            )
    return checks


def _encode(medians: Dict[str, Any]) -> Dict[str, Any]:
    return {
        name: [encode_real(bound) for bound in value]
        if isinstance(value, tuple)
        else encode_real(value)
        for name, value in medians.items()
    }


def run_experiment(config: ExperimentConfig) -> TheoremReport:
    """Run the experiment described by `config`.

    One path is drawn per seed. For a local scope, each ``(seed, t₀)`` run estimates the
    exponents at ``t₀`` and the dimensions in the balls of the dimension radii
    around ``t₀``, the finest radius giving the measured values. For a global scope, each seed
    run estimates the exponents at all the ``t₀`` and the dimensions of the whole path, and the
    bounds are predicted from the infimum of the exponents.

    The checks are made on the medians over the seeds: the dimensions against the bounds
    predicted from the median exponents, the range against the graph, the ordering of the
    exponents and, when they are known, the exponents against their expected values. Each run
    also carries the same checks on its own numbers.

    Raises
    ------
    BudgetExceededError
        If a path has too many points for its sampler.
    InsufficientDataError
        If a ball or a path holds too few points to measure a dimension.

    """
    logger.info(
        "Running %s: %s on %d points, %d seed(s), %s scope",
        config.name,
        config.process.kind.value,
        config.grid.size,
        len(config.seeds),
        config.scope.value,
    )
    paths = sample_paths(config)
    if config.scope is Scope.LOCAL:
        results = _map(
            config.workers,
            lambda task: _local_run(config, *task),
            [(path, t0) for path in paths for t0 in config.t0_list],
        )
        groups = {
            point_label(t0): [result for result in results if result.t0 == t0]
            for t0 in config.t0_list
        }
    else:
        results = _map(config.workers, lambda path: _global_run(config, path), paths)
        groups = {GLOBAL_KEY: results}

    aggregates: Dict[str, Any] = {}
    checks: List[Check] = []
    for key, group in groups.items():
        medians = _aggregate(config, group)
        aggregates[key] = _encode(medians)
        checks.extend(
            _dimension_checks(
                config,
                key,
                medians["graph_dimension"],
                medians["range_dimension"],
                medians["graph_bounds"],
                medians["range_bounds"],
            )
        )
    for t0 in config.t0_list:
        estimates = [
            estimate
            for result in results
            for estimate in result.exponents
            if estimate.t0 == t0
        ]
        checks.extend(
            _exponent_checks(
                config,
                t0,
                _median([estimate.alpha_tilde_hat for estimate in estimates]),
                _median([estimate.alpha_under_hat for estimate in estimates]),
            )
        )

    report = TheoremReport(
        name=config.name,
        config=config_to_dict(config),
        results=results,
        aggregates=aggregates,
        checks=checks,
    )
    for check in report.failures:
        logger.warning(
            "%s: check %s failed, %s not in [%s, %s] up to %s",
            config.name,
            check.name,
            check.measured,
            check.low,
            check.high,
            check.tolerance,
        )
    logger.info("%s: %d check(s), %d failure(s)", config.name, len(checks), len(report.failures))
    return report

