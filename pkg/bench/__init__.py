"""Entrosense comparative benchmark harness."""

from bench.cli import main
from bench.fixtures import build_fixtures, gen_fixtures
from bench.runner import BenchResult, plan_tasks, run_benchmark
from bench.schemas import ExperimentConfig, build_experiment_config

__all__ = [
    "BenchResult",
    "ExperimentConfig",
    "build_experiment_config",
    "build_fixtures",
    "gen_fixtures",
    "main",
    "plan_tasks",
    "run_benchmark",
]
