"""
Information-theoretic clustering by coordinate-descent relabeling.

Seeds are picked farthest-first starting from the densest point (largest
information-potential contribution); every point then joins its nearest seed.
Sweeps visit points in index order and move a point to the cluster giving
the largest strict CEF decrease, never emptying a cluster.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import cdist

from clustering.features import FeatureSet, default_bandwidth
from clustering.objective import ClusterObjective, build_objective
from config import MAX_CLUSTER_POINTS, MAX_GRAY
from entropy.kernel import gaussian_kernel_matrix
from errors import DimensionMismatchError, ParameterRangeError, SingletonClusterError
from imaging.image import GrayImage
from models import ClusterOptions, EntropySpec, Labeling
from utils.rounding import divide_round_half_up

logger = logging.getLogger("entrosense.clustering")


def _seed_indices(points: np.ndarray, kernel: np.ndarray, k: int) -> List[int]:
    seeds = [int(np.argmax(kernel.sum(axis=1)))]
    nearest = cdist(points, points[seeds]).ravel()
    while len(seeds) < k:
        candidate = int(np.argmax(nearest))
        if nearest[candidate] == 0.0:
            # fewer distinct points than clusters: take the first unused index
            taken = set(seeds)
            candidate = next(i for i in range(points.shape[0]) if i not in taken)
        seeds.append(candidate)
        nearest = np.minimum(nearest, cdist(points, points[[candidate]]).ravel())
    return seeds


def initial_labels(points: np.ndarray, kernel: np.ndarray, k: int) -> np.ndarray:
    seeds = _seed_indices(points, kernel, k)
    labels = np.argmin(cdist(points, points[seeds]), axis=1).astype(np.int64)
    labels[seeds] = np.arange(k)
    return labels


def _sweep(objective: ClusterObjective) -> int:
    moves = 0
    for index in range(objective.labels.size):
        source = int(objective.labels[index])
        if objective.sizes[source] <= 1:
            continue
        best_target, best_value = source, objective.value()
        for target in range(objective.k):
            if target == source:
                continue
            value = objective.trial(index, target)
            if value < best_value:
                best_target, best_value = target, value
        if best_target != source:
            objective.commit(index, best_target)
            moves += 1
    return moves


def _as_features(points: Union[FeatureSet, npt.ArrayLike]) -> FeatureSet:
    return points if isinstance(points, FeatureSet) else FeatureSet(points)


def cluster(
    points: Union[FeatureSet, npt.ArrayLike],
    k: int,
    sigma: Optional[float] = None,
    spec: EntropySpec = EntropySpec.renyi(2.0),
    opts: ClusterOptions = ClusterOptions(),
) -> Labeling:
    """Partition ``points`` into ``k`` clusters minimizing the CEF of ``spec``."""
    features = _as_features(points)
    n = len(features)
    if k < 2:
        raise SingletonClusterError(f"clustering needs k >= 2, got {k}")
    if n < k:
        raise ParameterRangeError(f"cannot form {k} clusters from {n} points")
    if n > MAX_CLUSTER_POINTS:
        raise ParameterRangeError(f"{n} points exceed the {MAX_CLUSTER_POINTS}-point limit")
    if sigma is None:
        sigma = default_bandwidth(features)

    kernel = gaussian_kernel_matrix(features.points, features.points, sigma)
    labels = initial_labels(features.points, kernel, k)
    objective = build_objective(features, labels, k, sigma, spec, opts, kernel=kernel)

    history = [objective.value()]
    sweeps = 0
    converged = False
    while sweeps < opts.max_sweeps:
        moves = _sweep(objective)
        sweeps += 1
        objective.rebuild()
        history.append(objective.value())
        logger.debug(
            "Sweep finished",
            extra={"family": spec.label, "sweep": sweeps, "moves": moves, "cef": history[-1]},
        )
        if moves == 0:
            converged = True
            break

    if not converged:
        logger.info("Clustering stopped at the %d-sweep cap before converging", opts.max_sweeps)
    return Labeling(
        labels=objective.labels,
        k=k,
        sweeps=sweeps,
        converged=converged,
        cef_history=tuple(float(v) for v in history),
    )


def label_levels(k: int) -> np.ndarray:
    """Gray value of every cluster id: round(255 m / (k - 1))."""
    if k == 1:
        return np.zeros(1, dtype=np.int64)
    return divide_round_half_up(MAX_GRAY * np.arange(k), k - 1)


def labels_to_image(labels: Labeling, dims: Tuple[int, int]) -> GrayImage:
    width, height = dims
    if len(labels) != width * height:
        raise DimensionMismatchError(
            f"{len(labels)} labels cannot fill a {width}x{height} image"
        )
    levels = label_levels(labels.k)
    return GrayImage(width, height, levels[labels.labels].reshape(height, width))


def image_to_labels(img: GrayImage, k: int) -> Labeling:
    """Inverse of ``labels_to_image``; off-level pixels snap to the nearest level."""
    levels = label_levels(k)
    distance = np.abs(img.as_int().reshape(-1, 1) - levels.reshape(1, -1))
    return Labeling(labels=np.argmin(distance, axis=1), k=k)
