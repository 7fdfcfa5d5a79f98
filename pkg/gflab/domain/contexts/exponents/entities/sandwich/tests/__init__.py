"""Package holding the tests for the ``SandwichReport`` and ``SandwichViolation`` exponents entities."""
