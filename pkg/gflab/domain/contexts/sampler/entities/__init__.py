"""Package to handle all entities of the gflab sampler context."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .grid import GridSpec, MAX_GRID_POINTS
from .path import SamplePath
