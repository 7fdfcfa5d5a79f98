"""Package to handle all entities of the gflab kernels context."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .profile import HolderExponents, HurstProfile, MarkedPoint, ProfileKind
from .kernel import IncrementKernel, KernelFamily
