"""Package holding the tests for the repository of presets."""
