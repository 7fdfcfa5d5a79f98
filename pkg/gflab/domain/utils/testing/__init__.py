"""Utils for gflab domain tests."""

try:
    import pytest
except ImportError:
    pass
else:
    pytest.register_assert_rewrite("gflab.domain.utils.testing.validation")
