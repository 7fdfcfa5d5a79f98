"""Package holding the tests for the ``GridSpec`` sampler entity."""
