"""Package holding the tests for the ``BallSpec`` geometry entity."""
