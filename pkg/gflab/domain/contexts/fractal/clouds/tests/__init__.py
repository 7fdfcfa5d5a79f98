"""Package holding the tests for the point clouds of sample paths."""
