"""Fitting pipelines."""
