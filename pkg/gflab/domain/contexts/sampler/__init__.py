"""Package to handle gflab domain sampler context.

The "sampler" context draws realizations of the Gaussian fields on grids:

- exact samples from a covariance factorization, and the sequential fBm sampler
- series samples of the generalized Weierstrass function and of the spectral mBm
- export of sample paths to CSV and binary files

Every draw is reproducible: coordinates and replicas use independent streams derived from the
seed by :obj:`gflab.domain.utils.random.substream`.

"""
