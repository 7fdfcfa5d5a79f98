"""Package holding the tests for the report entities of the harness."""
