"""Package to handle gflab domain geometry context.

The "geometry" context defines the index-space objects every other context builds on:

- points of the nonnegative orthant, boxes and balls
- Lebesgue measures of corner boxes and of their symmetric differences
- distances and the sampling of pairs of points inside balls

"""
