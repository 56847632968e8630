"""Evaluation and scoring pipelines."""
