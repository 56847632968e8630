"""Command-line tools: simulate, fit, reconstruct, evaluate, anomaly, sweep and schema."""
