"""Package holding the tests for the ``WindowPolicy`` fractal entity."""
