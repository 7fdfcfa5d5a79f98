"""Package holding the tests for the JSON configurations."""
