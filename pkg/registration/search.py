"""
Coarse-to-fine MI registration: exhaustive integer grid, then hill climbing.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from analyzers.correlation import nccc
from config import MAX_REFINEMENT_MOVES, REFINEMENT_STEPS
from errors import EmptyOverlapError, EmptyPointsError
from imaging.image import GrayImage
from models import EntropySpec, RegistrationResult, SearchConfig, TransformParams
from registration.mutual_information import align_slave, check_bins, mi_score

logger = logging.getLogger("entrosense.registration")

_NEIGHBOR_OFFSETS = tuple(
    (ox, oy) for ox, oy in itertools.product((-1, 0, 1), repeat=2) if (ox, oy) != (0, 0)
)


class _Evaluator:
    """Memoized MI evaluation that counts distinct candidates scored."""

    def __init__(self, master: GrayImage, slave: GrayImage, spec: EntropySpec, bins: int):
        self.master = master
        self.slave = slave
        self.spec = spec
        self.bins = bins
        self.evaluations = 0
        self._cache: Dict[Tuple[float, float, float], Optional[float]] = {}

    def _within_bounds(self, params: TransformParams) -> bool:
        return abs(params.dx) < self.slave.width and abs(params.dy) < self.slave.height

    def _score(self, params: TransformParams) -> Optional[float]:
        if not self._within_bounds(params):
            return None
        try:
            return mi_score(self.master, self.slave, params, self.spec, self.bins)
        except EmptyOverlapError:
            return None

    def score_many(
        self,
        candidates: Sequence[TransformParams],
        workers: int = 1,
    ) -> List[Optional[float]]:
        pending = [c for c in candidates if c.sort_key() not in self._cache]
        if workers > 1 and len(pending) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                scores = list(executor.map(self._score, pending))
        else:
            scores = [self._score(c) for c in pending]
        for candidate, score in zip(pending, scores):
            self._cache[candidate.sort_key()] = score
            self.evaluations += 1
        return [self._cache[c.sort_key()] for c in candidates]


def _pick_best(
    candidates: Sequence[TransformParams],
    scores: Sequence[Optional[float]],
) -> Tuple[Optional[TransformParams], float]:
    """Highest score; equal scores resolve to the lexicographically smallest params."""
    best: Optional[TransformParams] = None
    best_score = -np.inf
    for candidate, score in sorted(zip(candidates, scores), key=lambda pair: pair[0].sort_key()):
        if score is not None and score > best_score:
            best, best_score = candidate, score
    return best, best_score


def _grid_candidates(search: SearchConfig) -> List[TransformParams]:
    offsets = range(-search.window, search.window + 1)
    candidates = [
        TransformParams(float(dx), float(dy), float(theta))
        for dx in offsets
        for dy in offsets
        for theta in search.rotations
    ]
    return sorted(candidates, key=TransformParams.sort_key)


def _refine(
    evaluator: _Evaluator,
    start: TransformParams,
    start_score: float,
) -> Tuple[TransformParams, float]:
    best, best_score = start, start_score
    for step in REFINEMENT_STEPS:
        for _ in range(MAX_REFINEMENT_MOVES):
            neighbors = [
                TransformParams(best.dx + ox * step, best.dy + oy * step, best.theta)
                for ox, oy in _NEIGHBOR_OFFSETS
            ]
            candidate, score = _pick_best(neighbors, evaluator.score_many(neighbors))
            if candidate is None or score <= best_score:
                break
            best, best_score = candidate, score
    return best, best_score


def register(
    master: GrayImage,
    slave: GrayImage,
    spec: EntropySpec,
    search: SearchConfig = SearchConfig(),
) -> RegistrationResult:
    """Find the rigid transform mapping master coordinates onto the slave."""
    bins = check_bins(search.bins)
    started = time.perf_counter()
    evaluator = _Evaluator(master, slave, spec, bins)

    grid = _grid_candidates(search)
    best, best_score = _pick_best(grid, evaluator.score_many(grid, search.workers))
    if best is None:
        raise EmptyOverlapError("no grid candidate leaves the minimum overlap")
    logger.debug(
        "Grid phase finished",
        extra={"family": spec.label, "candidates": len(grid), "best": best.to_dict()},
    )

    if search.refine:
        best, best_score = _refine(evaluator, best, best_score)

    aligned, overlap = align_slave(master, slave, best)
    correlation = nccc(master, aligned, overlap)
    wall_time = time.perf_counter() - started
    logger.info(
        "Registration finished for %s: dx=%.2f dy=%.2f theta=%.4f mi=%.6f nccc=%.4f",
        spec.label,
        best.dx,
        best.dy,
        best.theta,
        best_score,
        correlation,
    )
    return RegistrationResult(
        params=best,
        mi=float(best_score),
        nccc=correlation,
        evaluations=evaluator.evaluations,
        wall_time=wall_time,
    )


def rmse_control_points(
    params: TransformParams,
    true_params: TransformParams,
    points: npt.ArrayLike,
    center: Tuple[float, float] = (0.0, 0.0),
) -> float:
    """Root mean square displacement between two transforms over control points."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if pts.shape[0] == 0:
        raise EmptyPointsError("at least one control point is required")
    displacement = params.apply(pts, center) - true_params.apply(pts, center)
    return float(np.sqrt(np.mean(np.sum(displacement**2, axis=1))))


def control_points(img: GrayImage) -> np.ndarray:
    """Four corners plus the center of ``img``."""
    w, h = img.width - 1, img.height - 1
    return np.array([[0, 0], [w, 0], [0, h], [w, h], list(img.center)], dtype=np.float64)
