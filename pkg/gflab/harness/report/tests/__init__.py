"""Package holding the tests for the report files."""
