"""Package holding the tests for the ``EnergyReport`` fractal entity."""
