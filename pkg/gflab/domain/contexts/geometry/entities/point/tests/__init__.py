"""Package holding the tests for the ``Point`` geometry entity."""
