"""Package holding the tests for the ``DimensionEstimate`` fractal entity."""
