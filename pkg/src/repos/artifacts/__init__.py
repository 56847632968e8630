"""Fit, truth, cache and report artifacts."""
