"""Package holding the tests for the ``ExponentEstimate`` exponents entity."""
