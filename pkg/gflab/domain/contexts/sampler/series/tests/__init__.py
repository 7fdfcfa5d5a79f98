"""Package holding the tests for the series samplers."""
