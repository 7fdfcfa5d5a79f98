"""Package to handle gflab domain kernels context.

The "kernels" context defines the laws of the Gaussian fields studied by gflab:

- Hurst profiles ``t ↦ H(t)`` with their declared regularity at marked points
- incremental variance kernels ``σ²(s, t) = E|X_t - X_s|²`` and covariances of the fractional
  Brownian motion, the multiparameter fractional Brownian motion, the multifractional Brownian
  motion and the generalized Weierstrass function

"""
