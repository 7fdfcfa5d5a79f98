"""Package holding the experiment harness of gflab.

The harness wires the domain contexts together: an experiment configuration names a process, a
grid, the points ``t₀`` and the seeds; running it estimates the exponents of the kernel, samples
the paths, measures the dimensions of their graphs and ranges, and checks them against the bounds
predicted from the exponents. Reports are written as JSON, CSV and plot data, and everything is
available from the ``gflab`` command line.

"""
