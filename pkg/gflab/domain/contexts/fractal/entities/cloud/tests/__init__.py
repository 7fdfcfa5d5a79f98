"""Package holding the tests for the ``PointCloud`` fractal entity."""
