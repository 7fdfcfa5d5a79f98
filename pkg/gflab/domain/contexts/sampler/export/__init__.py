"""Export of sample paths to CSV and binary files.

The binary format is little-endian, made of a header followed by the values, coordinate after
coordinate:

=========  ============================  ==========================================
bytes      type                          content
=========  ============================  ==========================================
4          ASCII                         the magic ``GFL1``
4 + 4      unsigned 32-bit integers      ``N`` and ``d``
8          unsigned 64-bit integer       the seed
4·N        unsigned 32-bit integers      the resolution of each axis
8·2N       IEEE 754 double precision     the lower corner, then the upper corner
8·n·d      IEEE 754 double precision     the ``n`` values of each coordinate in turn
=========  ============================  ==========================================

"""
import csv
import logging
from pathlib import Path
from typing import Union

import numpy as np

from gflab.domain.contexts.geometry.entities import Box
from gflab.domain.utils.errors import ExportError

from ..entities import GridSpec, SamplePath


logger = logging.getLogger(__name__)

#: First bytes of every binary sample path file.
MAGIC = b"GFL1"

_FIXED_HEADER_SIZE = len(MAGIC) + 4 + 4 + 8

PathLike = Union[str, Path]


def write_csv(path: SamplePath, filename: PathLike) -> Path:
    """Write `path` as a CSV file with one row per grid point: its coordinates, then its values.

    Raises
    ------
    ExportError
        If the file cannot be written.

    """
    filename = Path(filename)
    header = [f"t{axis + 1}" for axis in range(path.grid.dimension)] + [
        f"x{coordinate + 1}" for coordinate in range(path.d)
    ]
    try:
        with filename.open("w", newline="") as file:
            writer = csv.writer(file)
            writer.writerow(header)
            for point, values in zip(path.points, path.values):
                writer.writerow([repr(float(value)) for value in (*point, *values)])
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    logger.debug("Wrote %d rows to %s", path.grid.size, filename)
    return filename


def write_binary(path: SamplePath, filename: PathLike) -> Path:
    """Write `path` in the ``GFL1`` binary format.

    Raises
    ------
    ExportError
        If the file cannot be written.

    """
    filename = Path(filename)
    grid = path.grid
    content = b"".join(
        [
            MAGIC,
            np.array([grid.dimension, path.d], dtype="<u4").tobytes(),
            np.array([path.seed], dtype="<u8").tobytes(),
            np.array(grid.resolution, dtype="<u4").tobytes(),
            np.array(
                grid.domain.lower.coords + grid.domain.upper.coords, dtype="<f8"
            ).tobytes(),
            np.ascontiguousarray(path.values.T, dtype="<f8").tobytes(),
        ]
    )
    try:
        filename.write_bytes(content)
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    logger.debug("Wrote %d bytes to %s", len(content), filename)
    return filename


def read_binary(filename: PathLike) -> SamplePath:
    """Read a sample path written by :obj:`write_binary`.

    The provenance of the path is not stored: the generator of the returned path only names the
    file it was read from.

    Raises
    ------
    ExportError
        If the file cannot be read, or is not a valid ``GFL1`` file.

    """
    filename = Path(filename)
    try:
        content = filename.read_bytes()
    except OSError as exception:
        raise ExportError(str(exception), context=str(filename)) from exception
    if len(content) < _FIXED_HEADER_SIZE or content[: len(MAGIC)] != MAGIC:
        raise ExportError("not a GFL1 file", context=str(filename))
    dimension, d = (int(value) for value in np.frombuffer(content, "<u4", 2, len(MAGIC)))
    seed = int(np.frombuffer(content, "<u8", 1, len(MAGIC) + 8)[0])
    offset = _FIXED_HEADER_SIZE
    if len(content) < offset + 4 * dimension + 16 * dimension:
        raise ExportError("truncated header", context=str(filename))
    resolution = tuple(int(value) for value in np.frombuffer(content, "<u4", dimension, offset))
    offset += 4 * dimension
    bounds = np.frombuffer(content, "<f8", 2 * dimension, offset).tolist()
    offset += 16 * dimension
    try:
        grid = GridSpec(
            domain=Box.of(bounds[:dimension], bounds[dimension:]), resolution=resolution
        )
    except (TypeError, ValueError) as exception:
        raise ExportError(f"invalid grid: {exception}", context=str(filename)) from exception
    if len(content) != offset + 8 * grid.size * d:
        raise ExportError(
            f"expected {grid.size * d} values after the header", context=str(filename)
        )
    values = np.frombuffer(content, "<f8", grid.size * d, offset).reshape(d, grid.size).T
    try:
        return SamplePath(
            grid=grid,
            values=values.astype(float),
            d=d,
            seed=seed,
            generator={"method": "binary", "source": str(filename)},
        )
    except ValueError as exception:
        raise ExportError(f"invalid values: {exception}", context=str(filename)) from exception
