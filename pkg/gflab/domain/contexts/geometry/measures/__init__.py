"""Lebesgue measures of corner rectangles, their symmetric differences, and distances.

The corner rectangle of a point ``t`` of the nonnegative orthant is ``[0, t]``. Functions ending
with ``_array`` are the vectorized versions working on ``(n, N)`` arrays of coordinates, used by
the kernels.

"""
import enum
import logging
from typing import Tuple, Union

import numpy as np
from scipy.stats import qmc

from gflab.domain.utils.errors import DimensionMismatchError, InsufficientDataError
from gflab.domain.utils.random import derive_seed

from ..entities import Box, Point


logger = logging.getLogger(__name__)


class Norm(enum.Enum):
    """The usual norms of R^N."""

    ONE = "one"
    TWO = "two"
    INF = "inf"


NormLike = Union[Norm, str]


def _pair_arrays(s: np.ndarray, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    s = np.atleast_2d(np.asarray(s, dtype=float))
    t = np.atleast_2d(np.asarray(t, dtype=float))
    if s.shape[-1] != t.shape[-1]:
        raise DimensionMismatchError(
            f"cannot compare points of dimensions {s.shape[-1]} and {t.shape[-1]}"
        )
    return s, t


def _check_same_dimension(s: Point, t: Point) -> None:
    if s.dimension != t.dimension:
        raise DimensionMismatchError(
            f"cannot compare points of dimensions {s.dimension} and {t.dimension}"
        )


def corner_volume_array(points: np.ndarray) -> np.ndarray:
    """Return the volume of ``[0, t]`` for each row ``t`` of `points`."""
    return np.prod(np.atleast_2d(points), axis=-1)


def sym_diff_array(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Return the measure of ``[0, s] △ [0, t]`` for each pair of rows of `s` and `t`.

    With ``m = s ∧ t``, both ``∏s - ∏m`` and ``∏t - ∏m`` are expanded as telescoping sums of
    nonnegative terms, so nearby points do not suffer from cancellation.

    Raises
    ------
    DimensionMismatchError
        If `s` and `t` do not have the same number of columns.

    Examples
    --------
    >>> sym_diff_array(np.array([[1.0, 1.0], [1.0, 2.0]]), np.array([[2.0, 1.0], [2.0, 1.0]]))
    array([1., 2.])

    """
    s, t = _pair_arrays(s, t)
    lower = np.minimum(s, t)
    return _telescoped_gap(s, lower) + _telescoped_gap(t, lower)


def _telescoped_gap(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    # ∏a - ∏b = Σ_k (a_k - b_k) ∏_{i<k} b_i ∏_{i>k} a_i
    ones = np.ones(upper.shape[:-1] + (1,))
    before = np.concatenate([ones, np.cumprod(lower, axis=-1)[..., :-1]], axis=-1)
    after = np.concatenate(
        [np.cumprod(upper[..., ::-1], axis=-1)[..., ::-1][..., 1:], ones], axis=-1
    )
    return np.sum((upper - lower) * before * after, axis=-1)


def dist_array(s: np.ndarray, t: np.ndarray, norm: NormLike = Norm.TWO) -> np.ndarray:
    """Return the distance, in the given `norm`, between each pair of rows of `s` and `t`."""
    s, t = _pair_arrays(s, t)
    norm = Norm(norm)
    gap = np.abs(t - s)
    if norm is Norm.ONE:
        return gap.sum(axis=-1)
    if norm is Norm.INF:
        return gap.max(axis=-1)
    return np.sqrt(np.sum(gap * gap, axis=-1))


def lebesgue_corner_volume(t: Point) -> float:
    """Return the Lebesgue measure of the corner rectangle ``[0, t]``.

    Examples
    --------
    >>> lebesgue_corner_volume(Point.of(1, 1))
    1.0
    >>> lebesgue_corner_volume(Point.of(2, 3))
    6.0
    >>> lebesgue_corner_volume(Point.of(0, 5))
    0.0

    """
    return float(corner_volume_array(t.as_array())[0])


def sym_diff_measure(s: Point, t: Point) -> float:
    """Return the Lebesgue measure of ``[0, s] △ [0, t]``.

    It equals ``∏sᵢ + ∏tᵢ - 2·∏(sᵢ ∧ tᵢ)``.

    Raises
    ------
    DimensionMismatchError
        If `s` and `t` do not have the same dimension.

    Examples
    --------
    >>> sym_diff_measure(Point.of(1, 1), Point.of(1, 1))
    0.0
    >>> sym_diff_measure(Point.of(1, 1), Point.of(2, 1))
    1.0
    >>> sym_diff_measure(Point.of(1, 2), Point.of(2, 1))
    2.0

    """
    _check_same_dimension(s, t)
    return float(sym_diff_array(s.as_array(), t.as_array())[0])


def dist(s: Point, t: Point, norm: NormLike = Norm.TWO) -> float:
    """Return the distance between `s` and `t` in the ``one``, ``two`` or ``inf`` norm.

    Raises
    ------
    DimensionMismatchError
        If `s` and `t` do not have the same dimension.

    Examples
    --------
    >>> origin, corner = Point.of(0, 0), Point.of(3, 4)
    >>> dist(origin, corner, "two"), dist(origin, corner, "one"), dist(origin, corner, Norm.INF)
    (5.0, 7.0, 4.0)

    """
    _check_same_dimension(s, t)
    return float(dist_array(s.as_array(), t.as_array(), norm)[0])


def fit_lemdist_constants(box: Box, count: int, seed: int) -> Tuple[float, float]:
    """Fit the constants comparing the symmetric difference measure to distances on a box.

    Pairs ``(s, t)`` are drawn in `box` from a scrambled Halton sequence, so that a larger
    `count` sees a superset of the pairs seen with a smaller one. The constants are
    ``m_hat = min m(△)/d₁`` and ``M_hat = max m(△)/d∞`` over the pairs, so that every sampled pair
    satisfies ``m_hat·d₁ ≤ m(△) ≤ M_hat·d∞``.

    Parameters
    ----------
    box : Box
        The box where points are drawn. Its lower corner must be strictly positive.
    count : int
        The number of pairs to draw, at least 2.
    seed : int
        The seed of the sequence scrambling.

    Returns
    -------
    Tuple[float, float]
        The fitted ``(m_hat, M_hat)``.

    Raises
    ------
    ValueError
        If the lower corner of `box` has a null coordinate.
    InsufficientDataError
        If less than two distinct pairs could be drawn.

    Examples
    --------
    >>> m_hat, big_m_hat = fit_lemdist_constants(Box.of((1, 1), (2, 2)), 256, seed=0)
    >>> 0 < m_hat <= big_m_hat
    True

    """
    lower, lengths = box.lower.as_array(), box.lengths
    if np.any(lower <= 0):
        raise ValueError("the lower corner of the box must be strictly positive")
    if count < 2:
        raise InsufficientDataError("at least 2 pairs are needed to fit constants")
    dimension = box.dimension
    sequence = qmc.Halton(d=2 * dimension, scramble=True, seed=derive_seed(seed))
    unit = sequence.random(count)
    s = lower + unit[:, :dimension] * lengths
    t = lower + unit[:, dimension:] * lengths
    measures = sym_diff_array(s, t)
    d_one = dist_array(s, t, Norm.ONE)
    d_inf = dist_array(s, t, Norm.INF)
    keep = d_inf > 0
    if keep.sum() < 2:
        raise InsufficientDataError("not enough distinct pairs to fit constants")
    m_hat = float(np.min(measures[keep] / d_one[keep]))
    big_m_hat = float(np.max(measures[keep] / d_inf[keep]))
    logger.debug(
        "Fitted constants on %s with %d pairs: m=%g, M=%g", box, count, m_hat, big_m_hat
    )
    return m_hat, big_m_hat
