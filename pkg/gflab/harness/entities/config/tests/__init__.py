"""Package holding the tests for the configuration entities of the harness."""
