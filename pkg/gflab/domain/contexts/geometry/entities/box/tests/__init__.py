"""Package holding the tests for the ``Box`` geometry entity."""
