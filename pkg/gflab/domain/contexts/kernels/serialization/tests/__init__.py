"""Package holding the tests for the kernels serialization."""
