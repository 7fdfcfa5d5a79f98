"""Package holding the tests for the export of sample paths."""
