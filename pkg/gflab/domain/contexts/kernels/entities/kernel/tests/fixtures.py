"""Module defining fixtures for the IncrementKernel kernels entity."""


from typing import Type

from pytest import fixture

from gflab.domain.contexts.kernels.entities.kernel import IncrementKernel

from .factories import IncrementKernelFactory


@fixture  # type: ignore
def increment_kernel_factory() -> Type[IncrementKernelFactory]:
    """Fixture to return the factory to create an ``IncrementKernel``.

    Returns
    -------
    Type[IncrementKernelFactory]
        The ``IncrementKernelFactory`` class.

    """
    return IncrementKernelFactory


@fixture  # type: ignore
def increment_kernel() -> IncrementKernel:
    """Fixture to return an ``IncrementKernel``.

    Returns
    -------
    IncrementKernel
        The created ``IncrementKernel``

    """
    return IncrementKernelFactory()
