"""Package holding the tests for the command line interface."""
