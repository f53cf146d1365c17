"""
Gray-level histograms: 1D, gray/local-mean 2D, and joint pair histograms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from config import GRAY_LEVELS
from entropy.distributions import JointProbabilityTable, ProbabilityVector
from errors import DimensionMismatchError, ParameterRangeError
from imaging.image import GrayImage, require_same_shape
from imaging.transforms import local_mean


def _frozen_counts(counts: npt.ArrayLike, ndim: int) -> np.ndarray:
    arr = np.asarray(counts, dtype=np.int64)
    if arr.ndim != ndim:
        raise DimensionMismatchError(f"expected {ndim}-D counts, got shape {arr.shape}")
    if np.any(arr < 0):
        raise ParameterRangeError("histogram counts must be nonnegative")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False, init=False)
class Histogram:
    counts: np.ndarray
    total: int

    def __init__(self, counts: npt.ArrayLike):
        frozen = _frozen_counts(counts, 1)
        object.__setattr__(self, "counts", frozen)
        object.__setattr__(self, "total", int(frozen.sum()))

    def occupied_levels(self) -> int:
        return int(np.count_nonzero(self.counts))

    def to_probability(self) -> ProbabilityVector:
        return ProbabilityVector(self.counts)


@dataclass(frozen=True, eq=False, init=False)
class JointHistogram:
    """counts[a][b] over gray-level pairs (256 x 256 unless quantized)."""

    counts: np.ndarray
    total: int

    def __init__(self, counts: npt.ArrayLike):
        frozen = _frozen_counts(counts, 2)
        object.__setattr__(self, "counts", frozen)
        object.__setattr__(self, "total", int(frozen.sum()))

    def row_counts(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    def col_counts(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    def is_diagonal(self) -> bool:
        off_diagonal = self.counts - np.diag(np.diag(self.counts))
        return not np.any(off_diagonal)

    def quantize(self, bins: int) -> "JointHistogram":
        """Merge levels by integer division: level g goes to bin g // (levels / bins)."""
        rows, cols = self.counts.shape
        if bins < 1 or rows % bins or cols % bins:
            raise ParameterRangeError(f"bins {bins} must divide the histogram size {rows}x{cols}")
        merged = self.counts.reshape(bins, rows // bins, bins, cols // bins).sum(axis=(1, 3))
        return JointHistogram(merged)

    def to_probability_table(self) -> JointProbabilityTable:
        return JointProbabilityTable(self.counts)


def histogram(img: GrayImage) -> Histogram:
    return Histogram(np.bincount(img.pixels.ravel(), minlength=GRAY_LEVELS))


def _pair_counts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    flat = a.astype(np.int64) * GRAY_LEVELS + b.astype(np.int64)
    return np.bincount(flat, minlength=GRAY_LEVELS * GRAY_LEVELS).reshape(GRAY_LEVELS, GRAY_LEVELS)


def gray_localmean_histogram(img: GrayImage, window: int) -> JointHistogram:
    """counts[g][m] with g the pixel value and m its rounded neighborhood mean."""
    means = local_mean(img, window)
    return JointHistogram(_pair_counts(img.pixels.ravel(), means.ravel()))


def joint_histogram(
    a: GrayImage,
    b: GrayImage,
    mask: Optional[np.ndarray] = None,
) -> JointHistogram:
    """counts[a(x,y)][b(x,y)] over every pixel, or over ``mask`` pixels only."""
    require_same_shape(a, b)
    va, vb = a.pixels, b.pixels
    if mask is not None:
        selector = np.asarray(mask, dtype=bool)
        if selector.shape != a.shape:
            raise DimensionMismatchError(f"mask shape {selector.shape} differs from {a.shape}")
        va, vb = va[selector], vb[selector]
    return JointHistogram(_pair_counts(va.ravel(), vb.ravel()))
