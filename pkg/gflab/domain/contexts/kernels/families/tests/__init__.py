"""Package holding the tests for the kernel families."""
