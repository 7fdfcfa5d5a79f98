"""Module holding BDD tests for the local exponents of sample paths as defined in ``paths.feature``."""
from functools import partial

import numpy as np
import pytest
from pytest_bdd import given, parsers, scenario, scenarios, then

from gflab.domain.contexts.exponents.estimation import kernel_exponents
from gflab.domain.contexts.exponents.paths import path_local_exponent
from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.families import fbm_kernel
from gflab.domain.contexts.sampler.entities import GridSpec, SamplePath
from gflab.domain.contexts.sampler.gaussian import sample_fbm_hosking
from gflab.domain.utils.errors import (
    DegeneratePathError,
    InsufficientDataError,
    OutOfDomainError,
)


FEATURE_FILE = "../features/paths.feature"
scenario = partial(scenario, FEATURE_FILE)

FUNCTIONS = {
    "t": lambda t: t,
    "|t - 0.5|^0.5": lambda t: np.abs(t - 0.5) ** 0.5,
    "(0, t)": lambda t: np.stack([np.zeros_like(t), t], axis=-1),
    "1": np.ones_like,
}


@scenario("The local exponent of a Lipschitz path is 1")
def test_lipschitz():
    pass


@given(
    parsers.parse("the path of t ↦ {function} on {count:d} points of [0, 1]"),
    target_fixture="path",
)
def a_function_path(function, count):
    grid = GridSpec.of([0.0], [1.0], count)
    values = np.asarray(FUNCTIONS[function](grid.axes()[0]), dtype=float)
    return SamplePath(
        grid=grid,
        values=values,
        d=1 if values.ndim == 1 else values.shape[1],
        seed=0,
        generator={"function": function},
    )


@then(parsers.parse("its local exponent at 0.5 is {expected:g} within {tolerance:g}"))
def local_exponent(path, expected, tolerance):
    assert abs(path_local_exponent(path, Point.of(0.5)) - expected) < tolerance


@then(
    "its local exponent at 0.5 on the radii 0.25, 0.125, 0.0625 and 0.03125 is 1 within 0.05"
)
def local_exponent_on_ladder(path):
    exponent = path_local_exponent(path, Point.of(0.5), [0.25, 0.125, 0.0625, 0.03125])
    assert abs(exponent - 1) < 0.05


@then("estimating its local exponent at 0.5 fails as the path is degenerate")
def degenerate_path(path):
    with pytest.raises(DegeneratePathError):
        path_local_exponent(path, Point.of(0.5))


@then("estimating its local exponent with 3 radii is refused")
def too_few_radii(path):
    with pytest.raises(InsufficientDataError):
        path_local_exponent(path, Point.of(0.5), [0.25, 0.125, 0.0625])


@then("estimating its local exponent with balls of fewer than 8 points is refused")
def too_few_points(path):
    with pytest.raises(InsufficientDataError):
        path_local_exponent(path, Point.of(0.5), [0.25, 0.125, 2 ** -9, 2 ** -10])


@then("estimating its local exponent at 2 is refused")
def outside_grid(path):
    with pytest.raises(OutOfDomainError):
        path_local_exponent(path, Point.of(2.0))


@given(
    parsers.parse("fbm paths with H={hurst:g} on 2^14 points of [0, 1] for 8 seeds"),
    target_fixture="paths",
)
def fbm_paths(hurst):
    grid = GridSpec.of([0.0], [1.0], 2 ** 14)
    return hurst, [sample_fbm_hosking(hurst, grid, seed=seed) for seed in range(8)]


@then("the median local exponent at 0.5 is within 0.1 of the kernel exponent")
def fbm_consistency(paths):
    hurst, samples = paths
    t0 = Point.of(0.5)
    kernel_exponent = kernel_exponents(fbm_kernel(hurst), t0).alpha_tilde_hat
    median = float(np.median([path_local_exponent(path, t0) for path in samples]))
    assert abs(median - kernel_exponent) <= 0.1


# To make pytest-bdd fail if some scenarios are not implemented. KEEP AT THE END
scenarios(FEATURE_FILE)
