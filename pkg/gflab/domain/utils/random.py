"""Reproducible random streams derived from integer seeds.

Every random draw in gflab goes through :obj:`substream` so that the same ``(seed, key)`` always
produces the same numbers, whatever the order in which streams are created.

"""
from typing import Tuple

import numpy as np


def substream(seed: int, *key: int) -> np.random.Generator:
    """Return the generator of the stream identified by `seed` and an integer `key` path.

    Parameters
    ----------
    seed : int
        The root seed (a nonnegative integer).
    key : int
        Indexes identifying the sub-stream, for example ``(replica, coordinate)``.

    Returns
    -------
    np.random.Generator
        A PCG64 generator seeded from ``SeedSequence(seed, spawn_key=key)``.

    Examples
    --------
    >>> first = substream(7, 0, 1).standard_normal(3)
    >>> again = substream(7, 0, 1).standard_normal(3)
    >>> bool((first == again).all())
    True
    >>> other = substream(7, 1, 0).standard_normal(3)
    >>> bool((first == other).all())
    False

    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=_key(key)))


def _key(key: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(int(part) for part in key)


def derive_seed(seed: int, *key: int) -> int:
    """Derive a 32-bit integer seed for libraries that only accept integers.

    Examples
    --------
    >>> derive_seed(3, 1) == derive_seed(3, 1)
    True
    >>> derive_seed(3, 1) == derive_seed(3, 2)
    False

    """
    sequence = np.random.SeedSequence(seed, spawn_key=_key(key))
    return int(sequence.generate_state(1)[0])
