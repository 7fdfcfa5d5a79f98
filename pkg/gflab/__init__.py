"""Gflab main package."""
