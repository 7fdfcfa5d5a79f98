"""Package to handle all entities of the gflab geometry context."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .point import Point
from .box import Box
from .ball import BallSpec
