"""
Maximum-entropy bi-level thresholding with a pluggable entropy family.

Background and foreground are renormalized class distributions; the
criterion is H(b) + H(f) for Shannon (Kapur) and Renyi (Sahoo), and the
pseudo-additive S(b) + S(f) + (1 - q) S(b) S(f) for Tsallis. Class sums come
from cumulative tables so a plateau of empty bins yields bit-identical
criterion values and the smallest maximizing threshold wins.
"""

from __future__ import annotations

import logging
from typing import Tuple

import numpy as np
from scipy import special

from config import DEFAULT_LOCAL_WINDOW, MAX_GRAY
from errors import DegenerateHistogramError
from imaging.histograms import Histogram, JointHistogram, gray_localmean_histogram, histogram
from imaging.image import GrayImage
from imaging.transforms import local_mean
from models import EntropyFamily, EntropySpec, Threshold, ThresholdResult

logger = logging.getLogger("entrosense.thresholding")


def _moment_table(p: np.ndarray, spec: EntropySpec) -> np.ndarray:
    """Per-bin summand: -p ln p for Shannon, p^order otherwise (0 on empty bins)."""
    if spec.family is EntropyFamily.SHANNON:
        return special.entr(p)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return np.where(p > 0, np.power(p, spec.order), 0.0)


def class_entropy(mass: np.ndarray, moment: np.ndarray, spec: EntropySpec) -> np.ndarray:
    """Entropy of a class with total ``mass`` and summed ``moment`` (mass > 0)."""
    if spec.family is EntropyFamily.SHANNON:
        return np.log(mass) + moment / mass
    ratio = moment / np.power(mass, spec.order)
    if spec.family is EntropyFamily.RENYI:
        return np.log(ratio) / (1.0 - spec.order)
    return (1.0 - ratio) / (spec.order - 1.0)


def combine(background: np.ndarray, foreground: np.ndarray, spec: EntropySpec) -> np.ndarray:
    if spec.family is EntropyFamily.TSALLIS:
        return background + foreground + (1.0 - spec.order) * background * foreground
    return background + foreground


def _criterion(
    mass_b: np.ndarray,
    moment_b: np.ndarray,
    mass_f: np.ndarray,
    moment_f: np.ndarray,
    spec: EntropySpec,
) -> Tuple[np.ndarray, np.ndarray]:
    """Criterion over all candidates plus the validity mask (both classes nonempty)."""
    valid = (mass_b > 0) & (mass_f > 0)
    values = np.full(mass_b.shape, -np.inf)
    with np.errstate(divide="ignore", invalid="ignore"):
        h_b = class_entropy(mass_b[valid], moment_b[valid], spec)
        h_f = class_entropy(mass_f[valid], moment_f[valid], spec)
    values[valid] = combine(h_b, h_f, spec)
    return values, valid


def _suffix_sums(values: np.ndarray) -> np.ndarray:
    return values[::-1].cumsum()[::-1]


def entropic_threshold(h: Histogram, spec: EntropySpec) -> ThresholdResult:
    """Gray level t maximizing the class-entropy criterion; pixels > t are foreground."""
    if h.total <= 0 or h.occupied_levels() < 2:
        raise DegenerateHistogramError("thresholding needs at least two distinct gray values")

    p = h.counts.astype(np.float64) / h.total
    moment = _moment_table(p, spec)
    # candidate t splits [0..t] | [t+1..255]
    mass_b, moment_b = p.cumsum()[:-1], moment.cumsum()[:-1]
    mass_f, moment_f = _suffix_sums(p)[1:], _suffix_sums(moment)[1:]
    values, valid = _criterion(mass_b, moment_b, mass_f, moment_f, spec)

    best = int(np.argmax(values))
    candidates = np.flatnonzero(valid)
    logger.debug(
        "1D entropic threshold selected",
        extra={"family": spec.label, "threshold": best, "candidates": int(candidates.size)},
    )
    return ThresholdResult(
        threshold=best,
        objective=float(values[best]),
        objective_curve=tuple(float(v) for v in values[candidates]),
        candidates=tuple(int(t) for t in candidates),
    )


def _block_sums(table: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Background [0..t]x[0..s] and foreground [t+1..]x[s+1..] sums for every (t, s)."""
    lower = table.cumsum(axis=0).cumsum(axis=1)[:-1, :-1]
    upper = table[::-1, ::-1].cumsum(axis=0).cumsum(axis=1)[::-1, ::-1][1:, 1:]
    return lower, upper


def entropic_threshold_2d(j: JointHistogram, spec: EntropySpec) -> ThresholdResult:
    """Exhaustive (t, s) search over a gray/local-mean histogram.

    Only the two diagonal blocks enter the criterion; off-diagonal mass is
    treated as edge noise and ignored.
    """
    if j.total <= 0 or np.count_nonzero(j.row_counts()) < 2:
        raise DegenerateHistogramError("thresholding needs at least two distinct gray values")

    p = j.counts.astype(np.float64) / j.total
    moment = _moment_table(p, spec)
    mass_b, mass_f = _block_sums(p)
    moment_b, moment_f = _block_sums(moment)
    values, valid = _criterion(mass_b, moment_b, mass_f, moment_f, spec)
    if not valid.any():
        raise DegenerateHistogramError("no (t, s) pair leaves both diagonal blocks nonempty")

    # row-major argmax: smallest t, then smallest s
    t, s = np.unravel_index(int(np.argmax(values)), values.shape)
    logger.debug(
        "2D entropic threshold selected",
        extra={"family": spec.label, "threshold": (int(t), int(s))},
    )
    return ThresholdResult(threshold=(int(t), int(s)), objective=float(values[t, s]))


def apply_threshold(
    img: GrayImage,
    threshold: Threshold,
    window: int = DEFAULT_LOCAL_WINDOW,
) -> GrayImage:
    """Binary 0/255 image: pixel > t (and, for a (t, s) pair, local mean > s)."""
    if isinstance(threshold, tuple):
        t, s = threshold
        foreground = (img.as_int() > t) & (local_mean(img, window) > s)
    else:
        foreground = img.as_int() > threshold
    return GrayImage.from_array(np.where(foreground, MAX_GRAY, 0))


def select_threshold(
    img: GrayImage,
    spec: EntropySpec,
    two_dimensional: bool = False,
    window: int = DEFAULT_LOCAL_WINDOW,
) -> Tuple[ThresholdResult, GrayImage]:
    """Histogram, threshold and binarize in one step."""
    if two_dimensional:
        result = entropic_threshold_2d(gray_localmean_histogram(img, window), spec)
    else:
        result = entropic_threshold(histogram(img), spec)
    return result, apply_threshold(img, result.threshold, window)
