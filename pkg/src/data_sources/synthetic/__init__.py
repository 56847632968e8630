"""Synthetic dynamic networks with known ground truth."""
