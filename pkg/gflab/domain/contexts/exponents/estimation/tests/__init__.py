"""Package holding the tests for the estimation of the local exponents of kernels."""
