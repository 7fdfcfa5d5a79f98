"""Package defining the entities of the configuration of experiments."""

import enum
import math
from typing import Any, Dict, Optional, Tuple

from gflab.domain.contexts.exponents.estimation import check_ladder
from gflab.domain.contexts.fractal.counting import check_scales
from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.contexts.kernels.entities import HurstProfile, IncrementKernel, KernelFamily
from gflab.domain.contexts.kernels.families import build_kernel
from gflab.domain.contexts.sampler.entities import GridSpec
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    to_float,
    to_float_tuple,
    validate_nonnegative_real,
    validate_positive_integer,
    validated,
)

from ..report import ReportFormat


#: Version of the configuration documents.
SCHEMA_VERSION = 1


class Scope(enum.Enum):
    """Where the dimensions of an experiment are measured.

    - ``local``: in shrinking balls around each ``t₀``, checked against the bounds predicted from
      the exponents at ``t₀``
    - ``global``: on the whole path, checked against the bounds predicted from the infimum of the
      exponents over all the ``t₀``

    """

    LOCAL = "local"
    GLOBAL = "global"


class ProcessKind(enum.Enum):
    """The processes an experiment can be run on."""

    FBM = "fbm"
    MPFBM = "mpfbm"
    GW = "gw"
    MBM = "mbm"


#: Kernel family used to estimate the exponents of each process.
EXPONENT_FAMILIES = {
    ProcessKind.FBM: KernelFamily.FBM,
    ProcessKind.MPFBM: KernelFamily.MPFBM,
    ProcessKind.GW: KernelFamily.GW,
    ProcessKind.MBM: KernelFamily.MBM_ASYMPTOTIC,
}

_PROFILED = {ProcessKind.GW, ProcessKind.MBM}


def _to_enum(enum_class: Any) -> Any:
    def convert(value: Any) -> Any:
        if isinstance(value, str):
            return enum_class(value)
        return value

    return convert


def _to_params(value: Any) -> Any:
    if isinstance(value, dict):
        return {name: to_float(item) for name, item in value.items()}
    return value


@validated()
class Tolerances(BaseEntity):
    """The slack allowed on each kind of check.

    Attributes
    ----------
    graph : float
        On the dimensions of graphs, ``0.10`` by default.
    range : float
        On the dimensions of ranges, ``0.05`` by default.
    exponent : float
        On the estimated exponents, ``0.05`` by default.
    projection : float
        On ``dim range ≤ dim graph``, ``0.10`` by default.

    """

    graph: float = required_field((int, float), frozen=True, converter=to_float, default=0.10)
    range: float = required_field((int, float), frozen=True, converter=to_float, default=0.05)
    exponent: float = required_field(
        (int, float), frozen=True, converter=to_float, default=0.05
    )
    projection: float = required_field(
        (int, float), frozen=True, converter=to_float, default=0.10
    )

    def _validate_tolerance(self, name: str, value: float) -> None:
        display_name = f"{self.__class__.__name__}.{name}"
        validate_nonnegative_real(value=value, none_allowed=False, display_name=display_name)
        if math.isinf(value):
            raise ValueError(f"{display_name} must be finite")

    @field_validator(graph)
    def validate_graph(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Tolerances.graph` field is a finite nonnegative real."""
        self._validate_tolerance("graph", value)

    @field_validator(range)
    def validate_range(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Tolerances.range` field is a finite nonnegative real."""
        self._validate_tolerance("range", value)

    @field_validator(exponent)
    def validate_exponent(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Tolerances.exponent` field is a finite nonnegative real."""
        self._validate_tolerance("exponent", value)

    @field_validator(projection)
    def validate_projection(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Tolerances.projection` field is a finite nonnegative real."""
        self._validate_tolerance("projection", value)


@validated()
class ProcessConfig(BaseEntity):
    """The process of an experiment.

    Attributes
    ----------
    kind : ProcessKind
        The process.
    dimension : int
        The dimension ``N`` of its index space.
    params : Dict[str, float]
        The parameters of its kernel: ``H`` for the fBm and the MpfBm, ``lambda`` and ``J`` for
        the generalized Weierstrass function, ``K`` and ``L`` for the mBm.
    profile : Optional[HurstProfile]
        The Hurst profile of the generalized Weierstrass function and of the mBm.

    Examples
    --------
    >>> ProcessConfig(kind="fbm", params={"H": 0.5}).kind
    <ProcessKind.FBM: 'fbm'>
    >>> ProcessConfig(kind="gw", params={})
    Traceback (most recent call last):
        ...
    ValueError: ProcessConfig.profile is required for gw

    """

    kind: ProcessKind = required_field(
        ProcessKind, frozen=True, converter=_to_enum(ProcessKind)
    )
    dimension: int = required_field(int, frozen=True, default=1)
    params: Dict[str, float] = required_field(dict, frozen=True, converter=_to_params)
    profile: Optional[HurstProfile] = optional_field(HurstProfile, frozen=True)

    @field_validator(dimension)
    def validate_dimension(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the dimension is positive, and 1 for profiled processes."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.dimension",
        )
        if self.kind in _PROFILED and value != 1:
            raise ValueError(
                f"{self.__class__.__name__}.dimension must be 1 for {self.kind.value}"
            )

    @field_validator(profile)
    def validate_profile(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the profile is given when needed, and that the kernel can be built.

        Raises
        ------
        ValueError
            If the process needs a profile and has none, or if its kernel cannot be built from
            its parameters.

        """
        if self.kind in _PROFILED and value is None:
            raise ValueError(
                f"{self.__class__.__name__}.profile is required for {self.kind.value}"
            )
        center = None if value is None else value.domain.lower
        self.kernel(center)

    def kernel(self, t0: Optional[Point] = None) -> IncrementKernel:
        """Build the kernel the exponents are estimated on.

        The kernel of the mBm is its asymptotic kernel around `t0`.

        Raises
        ------
        ConfigError
            If the kernel cannot be built from the parameters.

        """
        params = dict(self.params)
        if self.kind is ProcessKind.MBM:
            params["t0"] = 0.0 if t0 is None else t0.coords[0]
        return build_kernel(EXPONENT_FAMILIES[self.kind], params, self.dimension, self.profile)


def _to_points(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        points = []
        for item in value:
            if isinstance(item, (int, float)) and not isinstance(item, bool):
                item = Point.of(item)
            elif isinstance(item, (list, tuple)):
                item = Point(coords=item)
            points.append(item)
        return tuple(points)
    return value


def _to_ints(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return value


def _to_formats(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(ReportFormat(item) if isinstance(item, str) else item for item in value)
    return value


@validated()
class ExperimentConfig(BaseEntity):
    """An experiment: a process, a grid, the points ``t₀`` and the seeds.

    Attributes
    ----------
    name : str
        The name of the experiment, used to name the files of its report.
    process : ProcessConfig
        The process.
    d : int
        The number of independent coordinates of the sampled paths.
    grid : GridSpec
        The grid the paths are sampled on.
    t0_list : Tuple[Point, ...]
        The points ``t₀``, in the domain of the grid.
    seeds : Tuple[int, ...]
        The seeds of the paths and of the pair sampling.
    scope : Scope
        Where the dimensions are measured.
    rho_ladder : Optional[Tuple[float, ...]]
        The radii of the balls the exponents are estimated on, the default ladder when ``None``.
    pairs_per_rho : int
        The number of pairs sampled in each of these balls.
    dimension_radii : Optional[Tuple[float, ...]]
        The radii of the balls the dimensions are measured on, mandatory for a local scope.
    scale_ladder : Optional[Tuple[float, ...]]
        The scales of the box counting of graphs: fractions of the diameter of the balls for a
        local scope, absolute scales for a global one. The default ones when ``None``.
    tolerances : Tolerances
        The slack of the checks.
    workers : int
        The number of threads the runs are spread on.
    out_dir : Optional[str]
        The directory the report is written to.
    formats : Tuple[ReportFormat, ...]
        The formats of the report.

    """

    name: str = required_field(str, frozen=True)
    process: ProcessConfig = required_field(ProcessConfig, frozen=True)
    d: int = required_field(int, frozen=True, default=1)
    grid: GridSpec = required_field(GridSpec, frozen=True)
    t0_list: Tuple[Point, ...] = required_field(tuple, frozen=True, converter=_to_points)
    seeds: Tuple[int, ...] = required_field(tuple, frozen=True, converter=_to_ints)
    scope: Scope = required_field(
        Scope, frozen=True, converter=_to_enum(Scope), default=Scope.LOCAL
    )
    rho_ladder: Optional[Tuple[float, ...]] = optional_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    pairs_per_rho: int = required_field(int, frozen=True, default=2000)
    dimension_radii: Optional[Tuple[float, ...]] = optional_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    scale_ladder: Optional[Tuple[float, ...]] = optional_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    tolerances: Tolerances = required_field(Tolerances, frozen=True, default=Tolerances())
    workers: int = required_field(int, frozen=True, default=1)
    out_dir: Optional[str] = optional_field(str, frozen=True)
    formats: Tuple[ReportFormat, ...] = required_field(
        tuple, frozen=True, converter=_to_formats, default=(ReportFormat.JSON,)
    )

    @field_validator(name)
    def validate_name(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.name` field is not blank."""
        if not value.strip():
            raise ValueError(f"{self.__class__.__name__}.name must not be blank")

    @field_validator(d)
    def validate_d(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.d` field is a positive integer."""
        validate_positive_integer(
            value=value, none_allowed=False, display_name=f"{self.__class__.__name__}.d"
        )

    @field_validator(grid)
    def validate_grid(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the grid matches the process dimension and its profile domain."""
        name = f"{self.__class__.__name__}.grid"
        if value.dimension != self.process.dimension:
            raise ValueError(
                f"{name} must have the dimension {self.process.dimension} of the process"
            )
        profile = self.process.profile
        if profile is not None and not (
            profile.domain.contains(value.domain.lower)
            and profile.domain.contains(value.domain.upper)
        ):
            raise ValueError(f"{name} must lie in the domain of the Hurst profile")

    @field_validator(t0_list)
    def validate_t0_list(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there are points ``t₀``, all in the domain of the grid.

        Raises
        ------
        ValueError
            If there is no point, or if a point is not in the domain of the grid.
        TypeError
            If an item is not a point.

        """
        name = f"{self.__class__.__name__}.t0_list"
        if not value:
            raise ValueError(f"{name} must not be empty")
        for point in value:
            if not isinstance(point, Point):
                raise TypeError(f"{name} must be points")
            if point.dimension != self.grid.dimension or not self.grid.domain.contains(point):
                raise ValueError(f"{name} must be points of the domain of the grid")

    @field_validator(seeds)
    def validate_seeds(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there are seeds, all nonnegative integers."""
        name = f"{self.__class__.__name__}.seeds"
        if not value:
            raise ValueError(f"{name} must not be empty")
        for seed in value:
            if isinstance(seed, bool) or not isinstance(seed, int):
                raise TypeError(f"{name} must be integers")
            validate_nonnegative_real(value=seed, none_allowed=False, display_name=name)

    @field_validator(rho_ladder)
    def validate_rho_ladder(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.rho_ladder` radii are strictly decreasing."""
        if value is not None:
            check_ladder(value)

    @field_validator(pairs_per_rho)
    def validate_pairs_per_rho(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.pairs_per_rho` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.pairs_per_rho",
        )

    @field_validator(dimension_radii)
    def validate_dimension_radii(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that a local scope has strictly decreasing dimension radii."""
        if value is None:
            if self.scope is Scope.LOCAL:
                raise ValueError(
                    f"{self.__class__.__name__}.dimension_radii is required for a local scope"
                )
            return
        check_ladder(value)

    @field_validator(scale_ladder)
    def validate_scale_ladder(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.scale_ladder` can give a slope."""
        if value is not None:
            check_scales(value)

    @field_validator(workers)
    def validate_workers(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.workers` field is a positive integer."""
        validate_positive_integer(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.workers",
        )

    @field_validator(formats)
    def validate_formats(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`ExperimentConfig.formats` are report formats."""
        if not value or not all(isinstance(item, ReportFormat) for item in value):
            raise ValueError(
                f"{self.__class__.__name__}.formats must be a nonempty tuple of report formats"
            )
