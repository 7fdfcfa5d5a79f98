"""Package holding the tests for the predicted dimensions."""
