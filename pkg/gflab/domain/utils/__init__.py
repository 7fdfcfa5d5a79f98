"""Utils for gflab domain code."""
