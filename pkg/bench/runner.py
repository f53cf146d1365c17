"""
Benchmark runner: plans experiment x family x sweep tasks, executes them
(optionally on a thread pool) and assembles results in plan order.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import Future, ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from analyzers.ranking import RankingComparison, compare_with_reference_ranking
from analyzers.timing import categorize_time
from bench.fixtures import (
    build_cluster_fixture,
    build_registration_fixture,
    build_threshold_fixture,
)
from bench.pipelines import PRIMARY_METRICS, run_cluster, run_register, run_threshold
from bench.schemas import ExperimentConfig
from errors import EntrosenseError, PipelineError
from models import EntropySpec, ExperimentOutcome, ReportRow

logger = logging.getLogger("entrosense.bench")

SweepValue = Union[None, int, float]
_PIPELINE_FAILURES = (EntrosenseError, ValueError, ArithmeticError)


@dataclass(frozen=True)
class BenchTask:
    experiment: str
    spec: EntropySpec
    sweep: str
    sweep_value: SweepValue = None

    @property
    def stage(self) -> str:
        return f"{self.experiment}/{self.spec.label}/{self.sweep}"


@dataclass
class BenchResult:
    config: ExperimentConfig
    outcomes: List[ExperimentOutcome] = field(default_factory=list)
    rows: List[ReportRow] = field(default_factory=list)
    comparisons: List[RankingComparison] = field(default_factory=list)

    def outcomes_for(self, experiment: str) -> List[ExperimentOutcome]:
        return [outcome for outcome in self.outcomes if outcome.experiment == experiment]


def sweep_points(experiment: str, config: ExperimentConfig) -> List[Tuple[str, SweepValue]]:
    if experiment == "threshold":
        return [(config.threshold_mode, None)]
    if experiment == "register":
        return [(f"bins={bins}", bins) for bins in config.mi_bins]
    if not config.sigma_sweep:
        return [("sigma=auto", None)]
    return [(f"sigma={sigma:g}", sigma) for sigma in config.sigma_sweep]


def plan_tasks(config: ExperimentConfig) -> List[BenchTask]:
    specs = config.specs()
    return [
        BenchTask(experiment, spec, sweep, value)
        for experiment in config.experiments
        for spec in specs
        for sweep, value in sweep_points(experiment, config)
    ]


def _build_fixtures(config: ExperimentConfig) -> Dict[str, object]:
    builders = {
        "threshold": build_threshold_fixture,
        "register": build_registration_fixture,
        "cluster": build_cluster_fixture,
    }
    fixtures: Dict[str, object] = {}
    for experiment in config.experiments:
        try:
            fixtures[experiment] = builders[experiment](config)
        except _PIPELINE_FAILURES as exc:
            raise PipelineError(f"fixtures/{experiment}", exc) from exc
    return fixtures


def _execute(task: BenchTask, fixtures: Dict[str, object], config: ExperimentConfig) -> ExperimentOutcome:
    fixture = fixtures[task.experiment]
    if task.experiment == "threshold":
        return run_threshold(fixture, task.spec, config, task.sweep)  # type: ignore[arg-type]
    if task.experiment == "register":
        return run_register(fixture, task.spec, config, task.sweep, int(task.sweep_value))  # type: ignore[arg-type]
    return run_cluster(fixture, task.spec, config, task.sweep, task.sweep_value)  # type: ignore[arg-type]


def _run_task(task: BenchTask, fixtures: Dict[str, object], config: ExperimentConfig) -> ExperimentOutcome:
    try:
        outcome = _execute(task, fixtures, config)
    except _PIPELINE_FAILURES as exc:
        raise PipelineError(task.stage, exc) from exc
    for name, value in outcome.metrics.items():
        if not math.isfinite(value):
            raise PipelineError(task.stage, ValueError(f"metric '{name}' is not finite: {value}"))
    logger.info(
        "Finished %s in %.3f s (%s=%.6f)",
        task.stage,
        outcome.wall_time,
        PRIMARY_METRICS[task.experiment],
        outcome.metrics[PRIMARY_METRICS[task.experiment]],
    )
    return outcome


def _drain_future_results(
    futures: Dict[Future[ExperimentOutcome], int],
    outcomes: List[Optional[ExperimentOutcome]],
) -> Dict[int, PipelineError]:
    failures: Dict[int, PipelineError] = {}
    for future in as_completed(futures):
        index = futures[future]
        try:
            outcomes[index] = future.result()
        except PipelineError as exc:
            logger.error("Pipeline stage %s failed: %s", exc.stage, exc.cause)
            failures[index] = exc
    return failures


def execute_tasks(
    tasks: List[BenchTask],
    fixtures: Dict[str, object],
    config: ExperimentConfig,
) -> List[ExperimentOutcome]:
    """Run every task; results come back in plan order whatever the job count."""
    if config.jobs == 1 or len(tasks) <= 1:
        return [_run_task(task, fixtures, config) for task in tasks]

    outcomes: List[Optional[ExperimentOutcome]] = [None] * len(tasks)
    with ThreadPoolExecutor(max_workers=config.jobs) as executor:
        futures = {
            executor.submit(_run_task, task, fixtures, config): index
            for index, task in enumerate(tasks)
        }
        failures = _drain_future_results(futures, outcomes)
    if failures:
        raise failures[min(failures)]
    return [outcome for outcome in outcomes if outcome is not None]


def outcome_rows(outcome: ExperimentOutcome, timings: bool) -> List[ReportRow]:
    wall_time = round(outcome.wall_time, 3) if timings else None
    category = categorize_time(outcome.wall_time) if timings else None
    return [
        ReportRow(
            experiment=outcome.experiment,
            family=outcome.spec.family.value,
            order=outcome.spec.order,
            sweep=outcome.sweep,
            metric=metric,
            value=float(outcome.metrics[metric]),
            wall_time=wall_time,
            time_category=category,
        )
        for metric in ordered_metrics(outcome)
    ]


def ordered_metrics(outcome: ExperimentOutcome) -> List[str]:
    """Primary metric first, the rest alphabetically."""
    primary = PRIMARY_METRICS[outcome.experiment]
    return [primary] + sorted(name for name in outcome.metrics if name != primary)


def family_scores(outcomes: List[ExperimentOutcome]) -> Dict[str, float]:
    """Best primary-metric value reached by each family over its orders and sweeps."""
    scores: Dict[str, float] = {}
    for outcome in outcomes:
        value = outcome.metrics[PRIMARY_METRICS[outcome.experiment]]
        family = outcome.spec.family.value
        scores[family] = max(value, scores.get(family, -math.inf))
    return scores


def run_benchmark(config: ExperimentConfig) -> BenchResult:
    tasks = plan_tasks(config)
    logger.info(
        "Running %d pipeline tasks",
        len(tasks),
        extra={"experiments": list(config.experiments), "jobs": config.jobs},
    )
    fixtures = _build_fixtures(config)
    result = BenchResult(config=config, outcomes=execute_tasks(tasks, fixtures, config))
    for outcome in result.outcomes:
        result.rows.extend(outcome_rows(outcome, config.timings))
    for experiment in config.experiments:
        scores = family_scores(result.outcomes_for(experiment))
        comparison = compare_with_reference_ranking(experiment, scores, PRIMARY_METRICS[experiment])
        logger.info(
            "Ranking for %s: %s",
            experiment,
            comparison.to_dict()["observed"],
            extra={"experiment": experiment, "agreement": comparison.agreement},
        )
        result.comparisons.append(comparison)
    return result
