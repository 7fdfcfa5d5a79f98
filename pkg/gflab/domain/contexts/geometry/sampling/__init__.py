"""Sampling of pairs of distinct points inside a ball of the nonnegative orthant.

The pairs discretize the ``sup``/``inf`` over ``s, t ∈ B(t₀, ρ)`` used by exponent estimators.
Every returned pair satisfies:

- both points lie in the euclidean ball, clipped to the nonnegative orthant,
- ``2⁻⁴⁰·ρ < d₂(s, t) < min(1, 2ρ)``, so that ``log d₂(s, t) < 0`` stays finite.

"""
import enum
import logging
from typing import List, Tuple, Union

import numpy as np
from scipy.stats import norm as standard_normal, qmc

from gflab.domain.utils.errors import RadiusTooSmallError
from gflab.domain.utils.random import derive_seed, substream

from ..entities import BallSpec, Point


logger = logging.getLogger(__name__)

#: Pairs closer than this fraction of the radius are rejected.
DISTANCE_FLOOR_FACTOR = 2.0 ** -40

#: Maximum number of lattice points enumerated by the grid strategy.
MAX_LATTICE_POINTS = 20_000

_MAX_DRAW_ROUNDS = 1_000


class PairStrategy(enum.Enum):
    """How pairs are laid out inside the ball."""

    GRID = "grid"
    QUASI_RANDOM = "quasi-random"


def check_radius(ball: BallSpec) -> None:
    """Check that `ball` is large enough to resolve distances above the floor.

    Raises
    ------
    RadiusTooSmallError
        If the radius is below ``2¹⁰·eps·max(1, ‖center‖∞)``.

    Examples
    --------
    >>> check_radius(BallSpec(center=Point.of(1.0), radius=1e-3))
    >>> check_radius(BallSpec(center=Point.of(1.0), radius=1e-14))
    Traceback (most recent call last):
        ...
    gflab.domain.utils.errors.RadiusTooSmallError: radius 1e-14 is too small around (1.0,)

    """
    scale = max(1.0, max(ball.center.coords))
    if ball.radius <= 2 ** 10 * np.finfo(float).eps * scale:
        raise RadiusTooSmallError(
            f"radius {ball.radius:g} is too small around {ball.center.coords}"
        )


def _distance_bounds(radius: float) -> Tuple[float, float]:
    return DISTANCE_FLOOR_FACTOR * radius, min(1.0, 2.0 * radius)


def _keep_pairs(s: np.ndarray, t: np.ndarray, radius: float) -> np.ndarray:
    floor, ceiling = _distance_bounds(radius)
    distances = np.sqrt(np.sum((t - s) ** 2, axis=-1))
    return (distances > floor) & (distances < ceiling)


def _points_in_ball(
    directions: np.ndarray, radii: np.ndarray, center: np.ndarray, radius: float
) -> np.ndarray:
    directions = directions / np.linalg.norm(directions, axis=-1, keepdims=True)
    return center + radius * radii[:, None] * directions


def _quasi_random_pairs(
    ball: BallSpec, count: int, seed: int
) -> Tuple[np.ndarray, np.ndarray]:
    dimension = ball.dimension
    center, radius = ball.center.as_array(), ball.radius
    sequence = qmc.Halton(d=2 * (dimension + 1), scramble=True, seed=derive_seed(seed))
    batch = max(64, 2 * count)
    kept_s: List[np.ndarray] = []
    kept_t: List[np.ndarray] = []
    total = 0
    for __ in range(_MAX_DRAW_ROUNDS):
        unit = np.clip(sequence.random(batch), 1e-12, 1 - 1e-12)
        points = []
        for offset in (0, dimension + 1):
            directions = standard_normal.ppf(unit[:, offset : offset + dimension])
            radii = unit[:, offset + dimension] ** (1.0 / dimension)
            points.append(_points_in_ball(directions, radii, center, radius))
        s, t = points
        keep = _keep_pairs(s, t, radius) & np.all(s >= 0, axis=-1) & np.all(t >= 0, axis=-1)
        kept_s.append(s[keep])
        kept_t.append(t[keep])
        total += int(keep.sum())
        if total >= count:
            break
    else:
        raise RadiusTooSmallError(
            f"could not draw {count} valid pairs in the ball around {ball.center.coords}"
        )
    return np.concatenate(kept_s)[:count], np.concatenate(kept_t)[:count]


def _lattice(ball: BallSpec, steps: int) -> np.ndarray:
    dimension = ball.dimension
    center, radius = ball.center.as_array(), ball.radius
    offsets = np.arange(-steps, steps + 1)
    mesh = np.stack(np.meshgrid(*([offsets] * dimension), indexing="ij"), axis=-1)
    mesh = mesh.reshape(-1, dimension)
    mesh = mesh[np.sum(mesh * mesh, axis=-1) <= steps * steps]
    points = center + (radius / steps) * mesh
    return points[np.all(points >= 0, axis=-1)]


def _grid_pairs(ball: BallSpec, count: int, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    steps = 1
    while True:
        points = _lattice(ball, steps)
        if len(points) > MAX_LATTICE_POINTS:
            raise RadiusTooSmallError(
                f"cannot lay {count} pairs on a grid in the ball around {ball.center.coords}"
            )
        if len(points) * (len(points) - 1) // 2 >= 2 * count:
            first, second = np.triu_indices(len(points), k=1)
            s, t = points[first], points[second]
            keep = _keep_pairs(s, t, ball.radius)
            if keep.sum() >= count:
                break
        steps += 1
    s, t = s[keep], t[keep]
    center = ball.center.as_array()
    with_center = np.flatnonzero(np.all(s == center, axis=-1) | np.all(t == center, axis=-1))
    others = np.setdiff1d(np.arange(len(s)), with_center)
    rng = substream(seed)
    if len(with_center) >= count:
        chosen = rng.choice(with_center, size=count, replace=False)
    else:
        chosen = np.concatenate(
            [with_center, rng.choice(others, size=count - len(with_center), replace=False)]
        )
    chosen = np.sort(chosen)
    logger.debug(
        "Grid of %d points (step %g) for %d pairs", len(points), ball.radius / steps, count
    )
    return s[chosen], t[chosen]


def sample_ball_pair_arrays(
    ball: BallSpec,
    count: int,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    seed: int = 0,
) -> Tuple[np.ndarray, np.ndarray]:
    """Array form of :obj:`sample_ball_pairs`.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        Two ``(count, N)`` arrays ``S`` and ``T``: the pairs are ``(S[i], T[i])``.

    Notes
    -----
    With the quasi-random strategy, the pairs drawn for a count ``n`` are the first ``n`` pairs
    drawn for any larger count. The grid strategy lays a lattice through the center of the ball
    and keeps the pairs involving the center first, then completes with random lattice pairs.

    """
    if isinstance(count, bool) or not isinstance(count, int) or count < 0:
        raise ValueError("the count of pairs must be a nonnegative integer")
    strategy = PairStrategy(strategy)
    dimension = ball.dimension
    if count == 0:
        return np.empty((0, dimension)), np.empty((0, dimension))
    check_radius(ball)
    if strategy is PairStrategy.GRID:
        return _grid_pairs(ball, count, seed)
    return _quasi_random_pairs(ball, count, seed)


def sample_ball_pairs(
    ball: BallSpec,
    count: int,
    strategy: Union[PairStrategy, str] = PairStrategy.QUASI_RANDOM,
    seed: int = 0,
) -> List[Tuple[Point, Point]]:
    """Sample `count` distinct pairs of points in `ball`, reproducibly for a given `seed`.

    Parameters
    ----------
    ball : BallSpec
        The ball, clipped to the nonnegative orthant.
    count : int
        The number of pairs. ``0`` gives an empty list.
    strategy : Union[PairStrategy, str]
        ``grid`` or ``quasi-random``.
    seed : int
        The seed of the sampling.

    Returns
    -------
    List[Tuple[Point, Point]]
        The pairs, with distances in ``(2⁻⁴⁰·ρ, min(1, 2ρ))``.

    Raises
    ------
    RadiusTooSmallError
        If the radius is too small to resolve distances, or if not enough pairs can be placed.

    Examples
    --------
    >>> ball = BallSpec(center=Point.of(1.0), radius=0.5)
    >>> sample_ball_pairs(ball, 0, "grid", seed=1)
    []
    >>> sample_ball_pairs(ball, 10, "grid", seed=1) == sample_ball_pairs(ball, 10, "grid", seed=1)
    True

    """
    s, t = sample_ball_pair_arrays(ball, count, strategy, seed)
    return [(Point(coords=first), Point(coords=second)) for first, second in zip(s, t)]
