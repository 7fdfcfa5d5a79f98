"""Package to handle all entities of the gflab fractal context."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .cloud import DimensionTarget, PointCloud
from .policy import WindowPolicy
from .dimension import DimensionEstimate
from .energy import EnergyReport, RieszEnergy
