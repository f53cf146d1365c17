"""
Label-agreement accuracy: confusion matrix, overall accuracy and kappa.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Union

import numpy as np
import numpy.typing as npt
from scipy.optimize import linear_sum_assignment

from errors import LengthMismatchError, ParameterRangeError
from imaging.image import GrayImage, require_same_shape

AUTO_MAPPING = "auto"

LabelMapping = Union[None, str, Mapping[int, int]]


@dataclass(frozen=True, eq=False, init=False)
class ConfusionMatrix:
    """k x k agreement counts; rows are reference labels, columns predicted."""

    counts: np.ndarray

    def __init__(self, counts: npt.ArrayLike):
        arr = np.array(counts, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
            raise ParameterRangeError(f"confusion matrix must be k x k with k >= 2, got {arr.shape}")
        if np.any(arr < 0):
            raise ParameterRangeError("confusion counts must be nonnegative")
        if arr.sum() == 0:
            raise ParameterRangeError("confusion matrix must hold at least one element")
        arr.setflags(write=False)
        object.__setattr__(self, "counts", arr)

    @property
    def k(self) -> int:
        return int(self.counts.shape[0])

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def is_diagonal(self) -> bool:
        return bool(np.count_nonzero(self.counts - np.diag(np.diag(self.counts))) == 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConfusionMatrix):
            return NotImplemented
        return np.array_equal(self.counts, other.counts)


def _as_labels(values: npt.ArrayLike, name: str) -> np.ndarray:
    arr = np.asarray(values).ravel()
    if arr.size and (not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0):
        raise ParameterRangeError(f"{name} labels must be nonnegative integers")
    return arr.astype(np.int64)


def _count(reference: np.ndarray, predicted: np.ndarray, k: int) -> np.ndarray:
    return np.bincount(reference * k + predicted, minlength=k * k).reshape(k, k)


def best_agreement_mapping(reference: npt.ArrayLike, predicted: npt.ArrayLike) -> Dict[int, int]:
    """Predicted-to-reference relabeling that maximizes the diagonal."""
    ref, pred = _as_labels(reference, "reference"), _as_labels(predicted, "predicted")
    k = max(int(ref.max(initial=0)), int(pred.max(initial=0))) + 1
    rows, cols = linear_sum_assignment(_count(ref, pred, k), maximize=True)
    return {int(p): int(r) for r, p in zip(rows, cols)}


def confusion(
    reference: npt.ArrayLike,
    predicted: npt.ArrayLike,
    mapping: LabelMapping = None,
) -> ConfusionMatrix:
    """Count matrix of reference vs predicted labels.

    ``mapping`` is applied to the predicted labels first; pass ``"auto"`` to
    resolve a cluster-id permutation by maximum agreement.
    """
    ref, pred = _as_labels(reference, "reference"), _as_labels(predicted, "predicted")
    if ref.size != pred.size:
        raise LengthMismatchError(f"label sequences differ in length: {ref.size} vs {pred.size}")

    if mapping == AUTO_MAPPING:
        mapping = best_agreement_mapping(ref, pred)
    if mapping:
        lookup: Mapping[int, int] = mapping  # type: ignore[assignment]
        pred = np.array([lookup.get(int(p), int(p)) for p in pred], dtype=np.int64)

    k = max(2, int(ref.max(initial=0)) + 1, int(pred.max(initial=0)) + 1)
    return ConfusionMatrix(_count(ref, pred, k))


def overall_accuracy(cm: ConfusionMatrix) -> float:
    return float(np.trace(cm.counts) / cm.total)


def kappa(cm: ConfusionMatrix) -> float:
    """Cohen's kappa; a matrix whose chance agreement is 1 scores 0."""
    total = float(cm.total)
    p_o = np.trace(cm.counts) / total
    p_e = float(np.sum(cm.counts.sum(axis=1) * cm.counts.sum(axis=0))) / (total * total)
    if p_e >= 1.0:
        return 0.0
    return float((p_o - p_e) / (1.0 - p_e))


def misclassification_error(binary: GrayImage, mask: GrayImage) -> float:
    """Fraction of pixels whose foreground membership disagrees with ``mask``."""
    require_same_shape(binary, mask)
    return float(np.mean((binary.pixels > 0) != (mask.pixels > 0)))


def _labels_from_pixels(img: GrayImage) -> np.ndarray:
    return (img.pixels.ravel() > 0).astype(np.int64)


def binary_confusion(binary: GrayImage, mask: GrayImage) -> ConfusionMatrix:
    require_same_shape(binary, mask)
    return confusion(_labels_from_pixels(mask), _labels_from_pixels(binary))


__all__ = [
    "AUTO_MAPPING",
    "ConfusionMatrix",
    "best_agreement_mapping",
    "binary_confusion",
    "confusion",
    "kappa",
    "misclassification_error",
    "overall_accuracy",
]
