"""Package holding the tests for the Hurst profiles operations."""
