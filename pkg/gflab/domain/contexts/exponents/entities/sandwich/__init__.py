"""Package defining the :obj:`SandwichReport` and :obj:`SandwichViolation` entities."""

from typing import Any, Dict, List, Optional, Tuple

from gflab.domain.contexts.geometry.entities import Point
from gflab.domain.utils.entity import (
    BaseEntity,
    field_validator,
    optional_field,
    required_field,
    to_float,
    to_float_tuple,
    validate_nonnegative_real,
    validate_positive_real,
    validated,
)

from ..estimate import encode_real


@validated()
class SandwichViolation(BaseEntity):
    """A sampled pair where ``σ²`` escapes ``[d^{2α̲+ε}, d^{2α̃-ε}]``.

    Attributes
    ----------
    rho : float
        The radius of the ball where the pair was sampled.
    s, t : Point
        The pair.
    sigma2 : float
        The incremental variance of the pair.
    lower, upper : float
        The bounds ``d^{2α̲+ε}`` and ``d^{2α̃-ε}`` for the pair.

    """

    rho: float = required_field((int, float), frozen=True, converter=to_float)
    s: Point = required_field(Point, frozen=True)
    t: Point = required_field(Point, frozen=True)
    sigma2: float = required_field((int, float), frozen=True, converter=to_float)
    lower: float = required_field((int, float), frozen=True, converter=to_float)
    upper: float = required_field((int, float), frozen=True, converter=to_float)

    @field_validator(rho)
    def validate_rho(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`SandwichViolation.rho` field is a positive real."""
        validate_positive_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.rho",
        )

    @field_validator(sigma2)
    def validate_sigma2(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`SandwichViolation.sigma2` field is a nonnegative real."""
        validate_nonnegative_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.sigma2",
        )

    @property
    def side(self) -> str:
        """Tell which bound is violated: ``"lower"`` or ``"upper"``."""
        return "lower" if self.sigma2 < self.lower else "upper"

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the violation."""
        return {
            "rho": self.rho,
            "s": list(self.s.coords),
            "t": list(self.t.coords),
            "sigma2": self.sigma2,
            "lower": self.lower,
            "upper": self.upper,
            "side": self.side,
        }


@validated()
class SandwichReport(BaseEntity):
    """The result of the check ``d^{2α̲+ε} ≤ σ²(s, t) ≤ d^{2α̃-ε}`` on balls around ``t₀``.

    Attributes
    ----------
    t0 : Point
        The center of the balls.
    epsilon : float
        The margin ``ε``, with ``0 < ε < 2α̃``.
    alpha_tilde_hat, alpha_under_hat : float
        The estimated exponents the bounds are built from.
    rho_ladder : Tuple[float, ...]
        The radii of the balls, strictly decreasing.
    violation_counts : Tuple[int, ...]
        The number of violating pairs at each radius.
    violations : List[SandwichViolation]
        Examples of violations, a few per radius.
    rho0_found : Optional[float]
        The largest radius such that no pair violates the bounds at this radius or any smaller
        one. ``None`` if there are violations at the smallest radius.

    Examples
    --------
    >>> report = SandwichReport(
    ...     t0=Point.of(0.5),
    ...     epsilon=0.1,
    ...     alpha_tilde_hat=0.5,
    ...     alpha_under_hat=0.5,
    ...     rho_ladder=[0.25, 0.125],
    ...     violation_counts=(0, 0),
    ...     violations=[],
    ...     rho0_found=0.25,
    ... )
    >>> report.passed
    True

    """

    t0: Point = required_field(Point, frozen=True)
    epsilon: float = required_field((int, float), frozen=True, converter=to_float)
    alpha_tilde_hat: float = required_field((int, float), frozen=True, converter=to_float)
    alpha_under_hat: float = required_field((int, float), frozen=True, converter=to_float)
    rho_ladder: Tuple[float, ...] = required_field(
        tuple, frozen=True, converter=to_float_tuple
    )
    violation_counts: Tuple[int, ...] = required_field(tuple, frozen=True, converter=tuple)
    violations: List[SandwichViolation] = required_field(list, frozen=True, converter=list)
    rho0_found: Optional[float] = optional_field(
        (int, float), frozen=True, converter=to_float
    )

    @field_validator(epsilon)
    def validate_epsilon(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the :obj:`SandwichReport.epsilon` field is a positive real."""
        validate_positive_real(
            value=value,
            none_allowed=False,
            display_name=f"{self.__class__.__name__}.epsilon",
        )

    @field_validator(violation_counts)
    def validate_violation_counts(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that there is one count of violations per radius."""
        if len(value) != len(self.rho_ladder):
            raise ValueError(
                f"{self.__class__.__name__}.violation_counts must have one value per radius"
            )

    @field_validator(rho0_found)
    def validate_rho0_found(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that :obj:`SandwichReport.rho0_found` is a radius of the ladder."""
        if value is not None and value not in self.rho_ladder:
            raise ValueError(
                f"{self.__class__.__name__}.rho0_found must be a radius of the ladder"
            )

    @property
    def passed(self) -> bool:
        """Tell if a radius without violations was found."""
        return self.rho0_found is not None

    @property
    def violation_count(self) -> int:
        """Return the total number of violating pairs."""
        return sum(self.violation_counts)

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-compatible document of the report."""
        return {
            "t0": list(self.t0.coords),
            "epsilon": self.epsilon,
            "alpha_tilde_hat": self.alpha_tilde_hat,
            "alpha_under_hat": encode_real(self.alpha_under_hat),
            "rho_ladder": list(self.rho_ladder),
            "violation_counts": list(self.violation_counts),
            "violations": [violation.to_dict() for violation in self.violations],
            "rho0_found": self.rho0_found,
            "passed": self.passed,
        }
