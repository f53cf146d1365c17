"""
Correlation-based quality scores for registration and thresholding.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from analyzers.accuracy import misclassification_error
from errors import EmptyForegroundError, NotBinaryError
from imaging.image import GrayImage, require_same_shape


def _abs_pearson(x: np.ndarray, y: np.ndarray) -> float:
    """|Pearson r| clamped to [0, 1]; zero variance on either side gives 0."""
    if x.size == 0:
        return 0.0
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return 0.0
    r = abs(float(np.dot(dx, dy))) / np.sqrt(sxx * syy)
    return float(min(1.0, r))


def nccc(master: GrayImage, aligned: GrayImage, mask: Optional[np.ndarray] = None) -> float:
    """Normalized cross-correlation coefficient over the overlap ``mask``."""
    require_same_shape(master, aligned)
    a = master.pixels.astype(np.float64)
    b = aligned.pixels.astype(np.float64)
    if mask is not None:
        a, b = a[mask], b[mask]
    return _abs_pearson(a.ravel(), b.ravel())


def threshold_correlation(original: GrayImage, binarized: GrayImage) -> float:
    require_same_shape(original, binarized)
    if np.unique(binarized.pixels).size > 2:
        raise NotBinaryError("binarized image holds more than two gray values")
    return _abs_pearson(
        original.pixels.ravel().astype(np.float64),
        binarized.pixels.ravel().astype(np.float64),
    )


def _area_score(predicted: np.ndarray, truth: np.ndarray) -> float:
    true_area = int(truth.sum())
    relative_error = abs(int(predicted.sum()) - true_area) / true_area
    return 1.0 - min(1.0, relative_error)


def _uniformity_score(original: GrayImage, predicted: np.ndarray) -> float:
    values = original.pixels.ravel().astype(np.float64)
    total_variance = float(values.var())
    if total_variance == 0.0:
        return 1.0
    classes = predicted.ravel()
    within = sum(
        float(values[classes == side].var()) * np.count_nonzero(classes == side)
        for side in (False, True)
        if np.any(classes == side)
    ) / values.size
    return float(min(1.0, max(0.0, 1.0 - within / total_variance)))


def average_score(original: GrayImage, binarized: GrayImage, ground_truth_mask: GrayImage) -> float:
    """Mean of three [0, 1] sub-scores, higher is better.

    1 - misclassification error, 1 - relative foreground area error and the
    region uniformity of ``original`` under the predicted partition.
    """
    require_same_shape(original, binarized)
    require_same_shape(original, ground_truth_mask)
    truth = ground_truth_mask.pixels > 0
    if not np.any(truth):
        raise EmptyForegroundError("ground-truth mask has no foreground pixels")
    predicted = binarized.pixels > 0

    sub_scores = (
        1.0 - misclassification_error(binarized, ground_truth_mask),
        _area_score(predicted, truth),
        _uniformity_score(original, predicted),
    )
    return float(np.mean(sub_scores))


__all__ = ["average_score", "nccc", "threshold_correlation"]
