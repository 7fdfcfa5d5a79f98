"""Package to handle gflab domain content."""
