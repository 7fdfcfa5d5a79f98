"""Package defining the entities of the reports of experiments."""

import enum
import math
from typing import Any, Dict, List, Optional, Tuple

from gflab.domain.contexts.exponents.entities import ExponentEstimate
from gflab.domain.contexts.exponents.entities.estimate import encode_real
from gflab.domain.contexts.fractal.entities import DimensionEstimate
from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    to_float,
    to_float_tuple,
    validate_nonnegative_real,
    validated,
)


class ReportFormat(enum.Enum):
    """The formats a report can be written in."""

    JSON = "json"
    CSV = "csv"
    PLOTDATA = "plotdata"


class Verdict(enum.Enum):
    """The outcome of a check."""

    PASS = "pass"
    FAIL = "fail"


def _validate_real(value: float, display_name: str) -> None:
    if math.isnan(value):
        raise ValueError(f"{display_name} must be a real or infinity")


def _validate_bounds(value: Tuple[float, ...], display_name: str) -> None:
    if len(value) != 2 or any(math.isnan(bound) for bound in value) or value[0] > value[1]:
        raise ValueError(f"{display_name} must be an ordered pair of reals")


@validated()
class Check(BaseEntity):
    """A measured value checked against a predicted interval.

    The verdict is derived from the recorded numbers only: the check passes if and only if
    ``low - tolerance ≤ measured ≤ high + tolerance``.

    Attributes
    ----------
    name : str
        What is checked, for example ``graph@0.25``.
    measured : float
        The measured value, maybe ``inf``.
    low : float
        The lower end of the predicted interval.
    high : float
        The upper end of the predicted interval, maybe ``inf``.
    tolerance : float
        The slack allowed on both ends.

    Examples
    --------
    >>> Check(name="graph", measured=1.55, low=1.5, high=1.5, tolerance=0.1).verdict
    <Verdict.PASS: 'pass'>
    >>> Check(name="graph", measured=1.65, low=1.5, high=1.5, tolerance=0.1).passed
    False

    """

    name: str = required_field(str, frozen=True)
    measured: float = required_field((int, float), frozen=True, converter=to_float)
    low: float = required_field((int, float), frozen=True, converter=to_float)
    high: float = required_field((int, float), frozen=True, converter=to_float)
    tolerance: float = required_field((int, float), frozen=True, converter=to_float)

    @field_validator(measured)
    def validate_measured(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Check.measured` field is not NaN."""
        _validate_real(value, f"{self.__class__.__name__}.measured")

    @field_validator(high)
    def validate_high(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`Check.low` and :obj:`Check.high` form an interval."""
        _validate_bounds((self.low, value), f"{self.__class__.__name__}.low/high")

    @field_validator(tolerance)
    def validate_tolerance(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`Check.tolerance` field is a nonnegative real."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.tolerance",
        )

    @property
    def passed(self) -> bool:
        """Tell if the measured value lies in the predicted interval, up to the tolerance."""
        return self.low - self.tolerance <= self.measured <= self.high + self.tolerance

    @property
    def verdict(self) -> Verdict:
        """Return the verdict of the check."""
        return Verdict.PASS if self.passed else Verdict.FAIL

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the check."""
        return {
            "name": self.name,
            "measured": encode_real(self.measured),
            "low": encode_real(self.low),
            "high": encode_real(self.high),
            "tolerance": self.tolerance,
            "verdict": self.verdict.value,
        }


def _to_trend(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(to_float_tuple(row) for row in value)
    return value


@validated()
class RunResult(BaseEntity):
    """The numbers measured on the path of one seed.

    Attributes
    ----------
    seed : int
        The seed of the path and of the pair sampling.
    t0 : Optional[Point]
        The center of the balls of a local run, ``None`` when the whole path is measured.
    exponents : Tuple[ExponentEstimate, ...]
        The estimated exponents of the kernel, one per point ``t₀`` of the run.
    alpha_tilde : float
        The exponent ``α̃`` the bounds are predicted from: the estimate at ``t₀``, or the
        infimum of the estimates for the whole path.
    alpha_under : float
        The sub-exponent ``α̲`` the bounds are predicted from, maybe ``inf``.
    graph_bounds : Tuple[float, float]
        The predicted interval of the dimension of the graph.
    range_bounds : Tuple[float, float]
        The predicted interval of the dimension of the range.
    graph_dimension : DimensionEstimate
        The measured dimension of the graph, at the finest radius for a local run.
    range_dimension : DimensionEstimate
        The measured dimension of the range, at the finest radius for a local run.
    trend : Tuple[Tuple[float, float, float], ...]
        For a local run, the ``(ρ, graph, range)`` dimensions along the radii.
    checks : Tuple[Check, ...]
        The checks of this run alone: its dimensions against its own predicted bounds, and its
        exponents.

    """

    seed: int = required_field(int, frozen=True)
    t0: Optional[Point] = optional_field(Point, frozen=True)
    exponents: Tuple[ExponentEstimate, ...] = required_field(
        tuple, frozen=True, converter=tuple
    )
    alpha_tilde: float = required_field((int, float), frozen=True, converter=to_float)
    alpha_under: float = required_field((int, float), frozen=True, converter=to_float)
    graph_bounds: Tuple[float, float] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    range_bounds: Tuple[float, float] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    graph_dimension: DimensionEstimate = required_field(DimensionEstimate, frozen=True)
    range_dimension: DimensionEstimate = required_field(DimensionEstimate, frozen=True)
    trend: Tuple[Tuple[float, float, float], ...] = required_field(
        tuple, frozen=True, converter=_to_trend, default=()
    )
    checks: Tuple[Check, ...] = required_field(tuple, frozen=True, converter=tuple, default=())

    @field_validator(seed)
    def validate_seed(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`RunResult.seed` field is a nonnegative integer."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.seed",
        )

    @field_validator(exponents)
    def validate_exponents(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there is at least one :obj:`RunResult.exponents` estimate."""
        if not value or not all(isinstance(item, ExponentEstimate) for item in value):
            raise ValueError(
                f"{self.__class__.__name__}.exponents must be a nonempty tuple of estimates"
            )

    @field_validator(alpha_under)
    def validate_alpha_under(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that ``0 < α̃ ≤ α̲``."""
        if math.isnan(value) or not 0 < self.alpha_tilde <= value:
            raise ValueError(
                f"{self.__class__.__name__}.alpha_under must be at least alpha_tilde, "
                "which must be positive"
            )

    @field_validator(graph_bounds)
    def validate_graph_bounds(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`RunResult.graph_bounds` is an interval."""
        _validate_bounds(value, f"{self.__class__.__name__}.graph_bounds")

    @field_validator(range_bounds)
    def validate_range_bounds(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`RunResult.range_bounds` is an interval."""
        _validate_bounds(value, f"{self.__class__.__name__}.range_bounds")

    @field_validator(checks)
    def validate_checks(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`RunResult.checks` are all checks."""
        if not all(isinstance(item, Check) for item in value):
            raise TypeError(f"{self.__class__.__name__}.checks must be checks")

    @property
    def passed(self) -> bool:
        """Tell if all the checks of the run passed."""
        return all(check.passed for check in self.checks)

    @property
    def label(self) -> str:
        """Return the name of the run in reports: its seed, and ``t₀`` for a local run."""
        if self.t0 is None:
            return f"seed={self.seed}"
        return f"seed={self.seed}@{point_label(self.t0)}"

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the run."""
        return {
            "seed": self.seed,
            "t0": None if self.t0 is None else list(self.t0.coords),
            "exponents": [estimate.to_dict() for estimate in self.exponents],
            "alpha_tilde": encode_real(self.alpha_tilde),
            "alpha_under": encode_real(self.alpha_under),
            "graph_bounds": [encode_real(bound) for bound in self.graph_bounds],
            "range_bounds": [encode_real(bound) for bound in self.range_bounds],
            "graph_dimension": self.graph_dimension.to_dict(),
            "range_dimension": self.range_dimension.to_dict(),
            "trend": [list(row) for row in self.trend],
            "checks": [check.to_dict() for check in self.checks],
            "verdict": (Verdict.PASS if self.passed else Verdict.FAIL).value,
        }


def point_label(point: Point) -> str:
    """Return the coordinates of `point` joined by commas, for the names of runs and checks."""
    return ",".join(f"{coordinate:g}" for coordinate in point.coords)


@validated()
class TheoremReport(BaseEntity):
    """The outcome of an experiment: the runs, their medians, and the checks on the medians.

    Attributes
    ----------
    name : str
        The name of the experiment.
    config : Dict[str, Any]
        The document of the configuration that produced the report.
    results : Tuple[RunResult, ...]
        The runs, by seed then by point ``t₀``.
    aggregates : Dict[str, Any]
        The medians over the seeds, by point ``t₀`` (or ``"global"``).
    checks : Tuple[Check, ...]
        The checks of the medians against the predictions.

    """

    name: str = required_field(str, frozen=True)
    config: Dict[str, Any] = required_field(dict, frozen=True)
    results: Tuple[RunResult, ...] = required_field(tuple, frozen=True, converter=tuple)
    aggregates: Dict[str, Any] = required_field(dict, frozen=True)
    checks: Tuple[Check, ...] = required_field(tuple, frozen=True, converter=tuple)

    @field_validator(results)
    def validate_results(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`TheoremReport.results` are all runs."""
        if not all(isinstance(item, RunResult) for item in value):
            raise TypeError(f"{self.__class__.__name__}.results must be runs")

    @field_validator(checks)
    def validate_checks(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`TheoremReport.checks` are all checks."""
        if not all(isinstance(item, Check) for item in value):
            raise TypeError(f"{self.__class__.__name__}.checks must be checks")

    @property
    def passed(self) -> bool:
        """Tell if all the checks passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        """Return the checks that failed."""
        return [check for check in self.checks if not check.passed]

    @property
    def run_failures(self) -> List[Tuple[str, Check]]:
        """Return the checks that failed on a single run, with the label of the run.

        The verdict of the report is made on the medians over the seeds: a run may fail alone.

        """
        return [
            (result.label, check)
            for result in self.results
            for check in result.checks
            if not check.passed
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the report."""
        return {
            "name": self.name,
            "config": self.config,
            "results": [result.to_dict() for result in self.results],
            "aggregates": self.aggregates,
            "checks": [check.to_dict() for check in self.checks],
            "verdict": (Verdict.PASS if self.passed else Verdict.FAIL).value,
        }
