"""Package holding the tests for the local exponents of sample paths."""
