"""Package holding the tests for the exact Gaussian samplers."""
