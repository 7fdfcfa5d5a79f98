"""Package to handle gflab domain contexts."""
