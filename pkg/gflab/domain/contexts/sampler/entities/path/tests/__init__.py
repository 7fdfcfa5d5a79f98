"""Package holding the tests for the ``SamplePath`` sampler entity."""
