"""Package holding the tests for the ``Preset`` harness entity."""
