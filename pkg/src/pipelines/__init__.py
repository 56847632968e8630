"""Pipelines for simulation, estimation and evaluation."""

from src.pipelines.estimation.fit_pipeline import FitOutcome, FitPipeline
from src.pipelines.evaluation.evaluation_pipeline import EvaluationPipeline
from src.pipelines.simulation.simulation_pipeline import SimulationPipeline

__all__ = [
    "EvaluationPipeline",
    "FitOutcome",
    "FitPipeline",
    "SimulationPipeline",
]
