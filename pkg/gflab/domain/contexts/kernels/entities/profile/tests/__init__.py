"""Package holding the tests for the ``HurstProfile`` kernels entity."""
