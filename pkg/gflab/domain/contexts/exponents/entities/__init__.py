"""Package to handle all entities of the gflab exponents context."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .estimate import ExponentEstimate
from .sandwich import SandwichReport, SandwichViolation
