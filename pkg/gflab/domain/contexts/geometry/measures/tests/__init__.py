"""Package holding the tests for the geometry measures."""
