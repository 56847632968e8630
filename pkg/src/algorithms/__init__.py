"""Estimation algorithms: basis, coefficients, subspace, affinity tests, reconstruction, baselines and anomaly scores."""
