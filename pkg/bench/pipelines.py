"""
One function per experiment: run the pipeline on its fixture and score it.

Wall time covers the pipeline call only; scoring and fixture building are
outside the timed region.
"""

from __future__ import annotations

import time
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from analyzers.accuracy import (
    best_agreement_mapping,
    confusion,
    kappa,
    misclassification_error,
    overall_accuracy,
)
from analyzers.correlation import average_score, threshold_correlation
from bench.fixtures import ClusterFixture, RegistrationFixture, ThresholdFixture
from bench.schemas import ExperimentConfig
from clustering.entropic import cluster, labels_to_image
from clustering.features import features_from_image
from models import ClusterOptions, EntropySpec, ExperimentOutcome, Labeling, SearchConfig
from registration.mutual_information import align_slave
from registration.search import control_points, register, rmse_control_points
from thresholding.entropic import select_threshold

PRIMARY_METRICS: Dict[str, str] = {
    "threshold": "average_score",
    "register": "nccc",
    "cluster": "kappa",
}


def _timed(call: Callable[[], Any]) -> Tuple[Any, float]:
    started = time.perf_counter()
    result = call()
    return result, time.perf_counter() - started


def run_threshold(
    fixture: ThresholdFixture,
    spec: EntropySpec,
    config: ExperimentConfig,
    sweep: str,
) -> ExperimentOutcome:
    two_dimensional = config.threshold_mode == "2d"
    (result, binary), wall_time = _timed(
        lambda: select_threshold(fixture.image, spec, two_dimensional, config.local_window)
    )
    metrics: Dict[str, float] = {
        "average_score": average_score(fixture.image, binary, fixture.mask),
        "correlation": threshold_correlation(fixture.image, binary),
        "misclassification_error": misclassification_error(binary, fixture.mask),
    }
    if result.is_two_dimensional:
        metrics["threshold_t"], metrics["threshold_s"] = (float(v) for v in result.threshold)
    else:
        metrics["threshold"] = float(result.threshold)
    return ExperimentOutcome(
        experiment="threshold",
        spec=spec,
        sweep=sweep,
        metrics=metrics,
        wall_time=wall_time,
        images={"binary": binary},
    )


def run_register(
    fixture: RegistrationFixture,
    spec: EntropySpec,
    config: ExperimentConfig,
    sweep: str,
    bins: int,
) -> ExperimentOutcome:
    search = SearchConfig(
        window=config.search_window,
        rotations=tuple(config.rotations),
        bins=bins,
    )
    result, wall_time = _timed(lambda: register(fixture.master, fixture.slave, spec, search))
    rmse = rmse_control_points(
        result.params,
        fixture.truth,
        control_points(fixture.master),
        center=fixture.master.center,
    )
    aligned, _ = align_slave(fixture.master, fixture.slave, result.params)
    return ExperimentOutcome(
        experiment="register",
        spec=spec,
        sweep=sweep,
        metrics={
            "nccc": result.nccc,
            "rmse": rmse,
            "mi": result.mi,
            "dx": result.params.dx,
            "dy": result.params.dy,
            "theta": result.params.theta,
            "evaluations": float(result.evaluations),
        },
        wall_time=wall_time,
        images={"registered": aligned},
    )


def run_cluster(
    fixture: ClusterFixture,
    spec: EntropySpec,
    config: ExperimentConfig,
    sweep: str,
    sigma: Optional[float],
) -> ExperimentOutcome:
    features = features_from_image(fixture.image, config.cluster_with_coords)
    opts = ClusterOptions(max_sweeps=config.max_sweeps)
    labeling, wall_time = _timed(
        lambda: cluster(features, fixture.k, sigma, spec, opts)
    )
    mapping = best_agreement_mapping(fixture.labels, labeling.labels)
    matrix = confusion(fixture.labels, labeling.labels, mapping)
    # renumber so the label image shows clusters in reference order
    renumbered = Labeling(
        labels=np.array([mapping.get(int(v), int(v)) for v in labeling.labels]),
        k=fixture.k,
    )
    return ExperimentOutcome(
        experiment="cluster",
        spec=spec,
        sweep=sweep,
        metrics={
            "kappa": kappa(matrix),
            "overall_accuracy": overall_accuracy(matrix),
            "cef": labeling.cef_history[-1],
            "sweeps": float(labeling.sweeps),
        },
        wall_time=wall_time,
        images={"labels": labels_to_image(renumbered, (fixture.image.width, fixture.image.height))},
    )
