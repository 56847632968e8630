"""Shared constants for all algorithms.

This module contains numerical defaults that are used across multiple
algorithms to provide a single source of truth. Commands read the per-environment
values from the configuration files; these are the fallbacks for library calls.
"""

# Composite midpoint panels for Gram matrices of generic bases (2^14)
DEFAULT_QUADRATURE_PANELS = 2**14

# Gram matrices with a larger eigenvalue ratio are rejected
DEFAULT_MAX_CONDITION_NUMBER = 1e10

# Truncated SVD
DEFAULT_SVD_TOLERANCE = 1e-8
DEFAULT_RESIDUAL_TOLERANCE = 1e-6
DEFAULT_DENSE_SVD_THRESHOLD = 256
DEFAULT_SCREE_COUNT = 20

# Multiple testing
DEFAULT_ALPHA = 0.05

# Haar levels beyond this overflow the dyadic cell arithmetic
MAX_HAAR_LEVELS = 30

# Gaussian kernels are truncated this many bandwidths from their centre
KERNEL_TRUNCATION = 8.0

# Pair patch used for MISE
DEFAULT_PATCH_SIZE = 100
DEFAULT_QUAD_POINTS = 4096
