"""Package holding the tests for the box counting of clouds and graphs."""
