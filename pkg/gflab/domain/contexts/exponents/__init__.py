"""Package to handle gflab domain exponents context.

The "exponents" context measures the regularity of the Gaussian fields near a point ``t₀``:

- the deterministic local exponent ``α̃`` and sub-exponent ``α̲`` of an incremental variance,
  from the ratios ``log σ²(s, t) / (2·log d(s, t))`` over pairs sampled in shrinking balls
- the check that ``σ²`` is squeezed between ``d^{2α̲+ε}`` and ``d^{2α̃-ε}`` near ``t₀``
- the local exponent of a sample path, from the decay of its oscillation

Sampling gives an inner approximation of the suprema and an outer one of the infima over the
balls: the number of pairs is a convergence knob, always reported with the estimates.

"""
