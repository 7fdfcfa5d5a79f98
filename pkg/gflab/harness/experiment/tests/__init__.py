"""Package holding the tests for the experiment runs."""
