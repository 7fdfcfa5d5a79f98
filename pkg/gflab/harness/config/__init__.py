"""Reading and writing experiment configurations as JSON documents.

A configuration document looks like::

    {
        "schema": 1,
        "name": "fbm-h05",
        "process": {"kind": "fbm", "dimension": 1, "params": {"H": 0.5}, "profile": null},
        "d": 1,
        "grid": {"lower": [0.0], "upper": [1.0], "resolution": [16385]},
        "t0_list": [[0.25], [0.5], [0.75]],
        "seeds": [0, 1, 2, 3],
        "scope": "global",
        "rho_ladder": null,
        "pairs_per_rho": 2000,
        "dimension_radii": null,
        "scale_ladder": null,
        "tolerances": {"graph": 0.1, "range": 0.05, "exponent": 0.05, "projection": 0.1},
        "workers": 1,
        "outputs": {"dir": null, "formats": ["json"]}
    }

Profiles are written as by :obj:`gflab.domain.contexts.kernels.serialization.profile_to_dict`.

"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

from gflab.domain.contexts.kernels.serialization import profile_from_dict, profile_to_dict
from gflab.domain.contexts.sampler.entities import GridSpec
from gflab.domain.utils.errors import ConfigError

from ..entities import ExperimentConfig, ProcessConfig, ReportFormat, Tolerances
from ..entities.config import SCHEMA_VERSION


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _optional_list(value: Optional[Iterable[float]]) -> Optional[list]:
    return None if value is None else list(value)


def config_to_dict(config: ExperimentConfig) -> Dict[str, Any]:
    """Return the JSON-compatible document describing `config`.

    Examples
    --------
    >>> from gflab.harness.presets import default_presets
    >>> document = config_to_dict(default_presets().get("fbm-h05").config)
    >>> document["schema"], document["process"]["params"], document["scope"]
    (1, {'H': 0.5}, 'global')

    """
    process = config.process
    return {
        "schema": SCHEMA_VERSION,
        "name": config.name,
        "process": {
            "kind": process.kind.value,
            "dimension": process.dimension,
            "params": dict(process.params),
            "profile": None if process.profile is None else profile_to_dict(process.profile),
        },
        "d": config.d,
        "grid": {
            "lower": list(config.grid.domain.lower.coords),
            "upper": list(config.grid.domain.upper.coords),
            "resolution": list(config.grid.resolution),
        },
        "t0_list": [list(point.coords) for point in config.t0_list],
        "seeds": list(config.seeds),
        "scope": config.scope.value,
        "rho_ladder": _optional_list(config.rho_ladder),
        "pairs_per_rho": config.pairs_per_rho,
        "dimension_radii": _optional_list(config.dimension_radii),
        "scale_ladder": _optional_list(config.scale_ladder),
        "tolerances": {
            "graph": config.tolerances.graph,
            "range": config.tolerances.range,
            "exponent": config.tolerances.exponent,
            "projection": config.tolerances.projection,
        },
        "workers": config.workers,
        "outputs": {
            "dir": config.out_dir,
            "formats": [output_format.value for output_format in config.formats],
        },
    }


def config_from_dict(document: Dict[str, Any]) -> ExperimentConfig:
    """Create the configuration described by `document`.

    Raises
    ------
    ConfigError
        If the document does not have the supported schema version, misses a key, or describes
        an invalid configuration.

    Examples
    --------
    >>> config_from_dict({"schema": 2})
    Traceback (most recent call last):
        ...
    gflab.domain.utils.errors.ConfigError: config: unsupported schema 2, expected 1

    """
    if not isinstance(document, dict):
        raise ConfigError("a configuration must be a JSON object", context="config")
    if document.get("schema") != SCHEMA_VERSION:
        raise ConfigError(
            f"unsupported schema {document.get('schema')}, expected {SCHEMA_VERSION}",
            context="config",
        )
    try:
        process = document["process"]
        profile = process.get("profile")
        grid = document["grid"]
        outputs = document.get("outputs") or {}
        optional: Dict[str, Any] = {
            key: document[key]
            for key in ("scope", "pairs_per_rho", "workers", "d")
            if document.get(key) is not None
        }
        if outputs.get("formats"):
            optional["formats"] = outputs["formats"]
        config = ExperimentConfig(
            name=document["name"],
            process=ProcessConfig(
                kind=process["kind"],
                dimension=process.get("dimension", 1),
                params=process.get("params", {}),
                profile=None if profile is None else profile_from_dict(profile),
            ),
            grid=GridSpec.of(grid["lower"], grid["upper"], tuple(grid["resolution"])),
            t0_list=document["t0_list"],
            seeds=document["seeds"],
            rho_ladder=document.get("rho_ladder"),
            dimension_radii=document.get("dimension_radii"),
            scale_ladder=document.get("scale_ladder"),
            tolerances=Tolerances(**(document.get("tolerances") or {})),
            out_dir=outputs.get("dir"),
            **optional,
        )
    except KeyError as exception:
        raise ConfigError(f"missing key {exception}", context="config") from exception
    except ConfigError:
        raise
    except (TypeError, ValueError) as exception:
        raise ConfigError(str(exception), context="config") from exception
    logger.debug("Loaded the configuration %r", config.name)
    return config


def load_config(filename: PathLike) -> ExperimentConfig:
    """Read the configuration stored as JSON in `filename`.

    Raises
    ------
    ConfigError
        If the file is not valid JSON, or does not describe a valid configuration.
    OSError
        If the file cannot be read.

    """
    filename = Path(filename)
    try:
        document = json.loads(filename.read_text())
    except json.JSONDecodeError as exception:
        raise ConfigError(str(exception), context=str(filename)) from exception
    return config_from_dict(document)


def with_overrides(
    config: ExperimentConfig,
    seed: Optional[int] = None,
    out_dir: Optional[PathLike] = None,
    formats: Optional[Iterable[Union[ReportFormat, str]]] = None,
) -> ExperimentConfig:
    """Return `config` with the values given on the command line.

    A `seed` replaces all the seeds of the configuration.

    Raises
    ------
    ConfigError
        If a value is invalid.

    Examples
    --------
    >>> from gflab.harness.presets import default_presets
    >>> config = with_overrides(default_presets().get("fbm-h05").config, seed=7)
    >>> config.seeds
    (7,)

    """
    changes: Dict[str, Any] = {}
    if seed is not None:
        changes["seeds"] = (seed,)
    if out_dir is not None:
        changes["out_dir"] = str(out_dir)
    if formats:
        changes["formats"] = tuple(formats)
    try:
        return config.evolve(**changes)
    except (TypeError, ValueError) as exception:
        raise ConfigError(str(exception), context="config") from exception
