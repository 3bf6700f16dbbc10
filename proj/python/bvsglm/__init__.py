"""Empirical-prior Bayesian variable selection for sparse GLMs.

Thin python surface over the C++ core: exponential-family primitives,
per-model MLE fits, the complexity prior and MLE-centered slab, Laplace and
Monte-Carlo marginal likelihoods, the add/delete/swap Metropolis-Hastings
sampler with its exact-enumeration oracle, theory diagnostics and the
simulation harness.
"""

from bvsglm._core import *  # noqa: F401,F403
from bvsglm._core import __doc__  # noqa: F401
