"""Package defining the repository of the experiments shipped with gflab.

Each preset checks one of the dimension results on a process with known exponents.

"""
from typing import Callable, Dict

from gflab.domain.contexts.exponents.estimation import dyadic_ladder
from gflab.domain.contexts.kernels.profiles import (
    affine_profile,
    constant_profile,
    power_cusp_profile,
)
from gflab.domain.contexts.sampler.entities import GridSpec
from gflab.domain.utils.repository import AbstractInMemoryRepository, AbstractRepository

from ..entities import ExperimentConfig, Preset, ProcessConfig, Scope, Tolerances


class AbstractPresetRepository(AbstractRepository[Preset], entity_class=Preset):
    """Base repository for the :obj:`.Preset` entity."""


class InMemoryPresetRepository(AbstractInMemoryRepository, AbstractPresetRepository):
    """Repository to handle :obj:`.Preset` entities in memory."""


def _fbm(name: str, hurst: float) -> Preset:
    return Preset(
        name=name,
        description=f"Graph of the fBm of index {hurst}: dimension 2 - H, range dimension 1",
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(kind="fbm", params={"H": hurst}),
            grid=GridSpec.of([0.0], [1.0], 2 ** 14 + 1),
            t0_list=[0.25, 0.5, 0.75],
            seeds=tuple(range(8)),
            scope=Scope.GLOBAL,
        ),
    )


def _mpfbm() -> Preset:
    name = "mpfbm-h04"
    return Preset(
        name=name,
        description="Graph of the MpfBm of index 0.4 on the unit square: dimension N + 1 - H",
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(kind="mpfbm", dimension=2, params={"H": 0.4}),
            grid=GridSpec.of([0.0, 0.0], [1.0, 1.0], (64, 64)),
            t0_list=[(0.5, 0.5), (1.0, 1.0)],
            seeds=tuple(range(4)),
            scope=Scope.GLOBAL,
            tolerances=Tolerances(graph=0.30),
        ),
    )


def _gw_affine() -> Preset:
    name = "gw-affine"
    return Preset(
        name=name,
        description=(
            "Generalized Weierstrass function of profile 0.3 + 0.4t: localized graph "
            "dimension 2 - H(t0)"
        ),
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(
                kind="gw", params={"lambda": 2.0}, profile=affine_profile(0.3, 0.4)
            ),
            grid=GridSpec.of([0.0], [1.0], 2 ** 15 + 1),
            t0_list=[0.25, 0.75],
            seeds=tuple(range(8)),
            scope=Scope.LOCAL,
            rho_ladder=dyadic_ladder(10, 36)[::2],
            dimension_radii=(0.125, 0.0625),
        ),
    )


def _gw_constant() -> Preset:
    name = "gw-constant"
    return Preset(
        name=name,
        description="Weierstrass function of constant index 0.5: graph dimension 1.5",
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(
                kind="gw", params={"lambda": 2.0}, profile=constant_profile(0.5)
            ),
            grid=GridSpec.of([0.0], [1.0], 2 ** 14 + 1),
            t0_list=[0.25, 0.5, 0.75],
            seeds=tuple(range(4)),
            scope=Scope.GLOBAL,
            rho_ladder=dyadic_ladder(10, 36)[::2],
        ),
    )


def _mbm_affine() -> Preset:
    name = "mbm-affine"
    return Preset(
        name=name,
        description=(
            "mBm of smooth profile 0.3 + 0.4t: exponents (H(t0), H(t0)), localized graph "
            "dimension 2 - H(t0)"
        ),
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(kind="mbm", params={}, profile=affine_profile(0.3, 0.4)),
            grid=GridSpec.of([0.0], [1.0], 2 ** 14 + 1),
            t0_list=[0.25, 0.75],
            seeds=tuple(range(8)),
            scope=Scope.LOCAL,
            rho_ladder=dyadic_ladder(4, 20),
            dimension_radii=(0.125, 0.0625),
        ),
    )


def _mbm_cusp() -> Preset:
    name = "mbm-cusp"
    return Preset(
        name=name,
        description=(
            "mBm whose profile has a cusp of exponent 0.3 below H(t0) = 0.45: exponents "
            "(0.3, 0.45); the profile rises by up to 0.09 within the balls"
        ),
        config=ExperimentConfig(
            name=name,
            process=ProcessConfig(
                kind="mbm",
                params={},
                profile=power_cusp_profile(0.45, 0.5, 0.3, 0.5, domain=(0.45, 0.55)),
            ),
            grid=GridSpec.of([0.45], [0.55], 2 ** 14 + 1),
            t0_list=[0.5],
            seeds=tuple(range(8)),
            scope=Scope.LOCAL,
            rho_ladder=dyadic_ladder(5, 20),
            dimension_radii=(0.003125, 0.0015625),
            tolerances=Tolerances(graph=0.15),
        ),
    )


#: Builders of the shipped presets, by name.
PRESET_BUILDERS: Dict[str, Callable[[], Preset]] = {
    "fbm-h05": lambda: _fbm("fbm-h05", 0.5),
    "fbm-h08": lambda: _fbm("fbm-h08", 0.8),
    "mpfbm-h04": _mpfbm,
    "gw-affine": _gw_affine,
    "gw-constant": _gw_constant,
    "mbm-affine": _mbm_affine,
    "mbm-cusp": _mbm_cusp,
}


def default_presets() -> InMemoryPresetRepository:
    """Return a repository holding the shipped presets.

    Examples
    --------
    >>> repository = default_presets()
    >>> repository.names()[:3]
    ['fbm-h05', 'fbm-h08', 'gw-affine']
    >>> repository.get("fbm-h08").config.process.params
    {'H': 0.8}

    """
    repository = InMemoryPresetRepository()
    for build in PRESET_BUILDERS.values():
        repository.add(build())
    return repository

