"""Package holding the tests for the ``IncrementKernel`` kernels entity."""
