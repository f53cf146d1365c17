"""
Feature vectors for pixel clustering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import pdist

from config import DEFAULT_BANDWIDTH_FACTOR, MAX_GRAY
from errors import DimensionMismatchError, EmptySamplesError
from imaging.image import GrayImage


@dataclass(frozen=True, eq=False, init=False)
class FeatureSet:
    """N points of dimension 1-3; ``source`` is the (width, height) they came from."""

    points: np.ndarray
    source: Optional[Tuple[int, int]]

    def __init__(self, points: npt.ArrayLike, source: Optional[Tuple[int, int]] = None):
        arr = np.array(points, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise EmptySamplesError("a feature set needs at least one point")
        if arr.shape[1] not in (1, 2, 3):
            raise DimensionMismatchError(f"feature dimension must be 1-3, got {arr.shape[1]}")
        if not np.all(np.isfinite(arr)):
            raise EmptySamplesError("feature components must be finite")
        if source is not None and source[0] * source[1] != arr.shape[0]:
            raise DimensionMismatchError(
                f"{arr.shape[0]} points cannot come from a {source[0]}x{source[1]} image"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)
        object.__setattr__(self, "source", None if source is None else (int(source[0]), int(source[1])))

    def __len__(self) -> int:
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])


def _unit_axis(length: int) -> np.ndarray:
    if length == 1:
        return np.zeros(1)
    return np.arange(length, dtype=np.float64) / (length - 1)


def features_from_image(img: GrayImage, with_coords: bool = False) -> FeatureSet:
    """Row-major pixel features: intensity in [0, 1], optionally x and y in [0, 1]."""
    intensity = img.pixels.ravel().astype(np.float64) / MAX_GRAY
    if not with_coords:
        return FeatureSet(intensity, source=(img.width, img.height))
    ys, xs = np.meshgrid(_unit_axis(img.height), _unit_axis(img.width), indexing="ij")
    points = np.column_stack([intensity, xs.ravel(), ys.ravel()])
    return FeatureSet(points, source=(img.width, img.height))


def diameter(features: FeatureSet) -> float:
    if len(features) < 2:
        return 0.0
    return float(pdist(features.points).max())


def default_bandwidth(features: FeatureSet) -> float:
    """A tenth of the feature-space diameter; degenerate sets get the bare factor."""
    spread = diameter(features)
    return DEFAULT_BANDWIDTH_FACTOR * spread if spread > 0 else DEFAULT_BANDWIDTH_FACTOR
