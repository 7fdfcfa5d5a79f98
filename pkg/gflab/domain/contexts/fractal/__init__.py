"""Package to handle gflab domain fractal context.

The "fractal" context measures the size of the graph ``{(t, X_t)}`` and the range ``{X_t}`` of
sample paths:

- point clouds of graphs and ranges, globally or restricted to a ball ``B(t₀, ρ)``
- box-counting dimensions, with occupied cells for clouds and crossed cells above columns for
  graphs of scalar fields
- Riesz energies of the empirical measure and a Frostman criterion on their stability under
  refinement

Hausdorff dimensions cannot be computed from finite samples: the box-counting dimension is used
as their numerical proxy.

"""
