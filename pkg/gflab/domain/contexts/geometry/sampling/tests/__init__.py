"""Package holding the tests for the sampling of pairs of points in balls."""
