"""
Entrosense Data Models

Dataclasses and enums shared across the entropy, imaging, pipeline and
harness packages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from config import (
    DEFAULT_CEF_HISTOGRAM_BINS,
    DEFAULT_MAX_SWEEPS,
    DEFAULT_MI_BINS,
    DEFAULT_SEARCH_WINDOW,
    ORDER_GUARD_BAND,
)
from errors import InvalidOrderError, ParameterRangeError


class EntropyFamily(Enum):
    """Entropy functional family."""

    SHANNON = "shannon"
    RENYI = "renyi"
    TSALLIS = "tsallis"


@dataclass(frozen=True)
class EntropySpec:
    """Entropy family plus its order (Renyi alpha or Tsallis q).

    The order is ignored for Shannon and normalized to 1.0 so that two
    Shannon specs always compare equal.
    """

    family: EntropyFamily
    order: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.family, EntropyFamily):
            object.__setattr__(self, "family", EntropyFamily(str(self.family).lower()))
        if self.family is EntropyFamily.SHANNON:
            object.__setattr__(self, "order", 1.0)
            return

        order = float(self.order)
        if not math.isfinite(order):
            raise InvalidOrderError(f"{self.family.value} order must be finite, got {order}")
        if self.family is EntropyFamily.RENYI and order <= 0:
            raise InvalidOrderError(f"renyi order must be > 0, got {order}")
        if abs(order - 1.0) <= ORDER_GUARD_BAND:
            raise InvalidOrderError(
                f"{self.family.value} order {order} is inside the guard band around 1; use shannon"
            )
        object.__setattr__(self, "order", order)

    @classmethod
    def shannon(cls) -> "EntropySpec":
        return cls(EntropyFamily.SHANNON)

    @classmethod
    def renyi(cls, alpha: float) -> "EntropySpec":
        return cls(EntropyFamily.RENYI, alpha)

    @classmethod
    def tsallis(cls, q: float) -> "EntropySpec":
        return cls(EntropyFamily.TSALLIS, q)

    @classmethod
    def parse(cls, text: str) -> "EntropySpec":
        """Parse ``shannon``, ``renyi:2`` or ``tsallis:0.5``."""
        name, _, raw_order = str(text).strip().lower().partition(":")
        try:
            family = EntropyFamily(name)
        except ValueError as exc:
            raise InvalidOrderError(f"unknown entropy family '{name}'") from exc
        if family is EntropyFamily.SHANNON:
            return cls(family)
        if not raw_order:
            raise InvalidOrderError(f"{family.value} requires an order, e.g. '{family.value}:2'")
        try:
            order = float(raw_order)
        except ValueError as exc:
            raise InvalidOrderError(f"invalid order '{raw_order}'") from exc
        return cls(family, order)

    @property
    def label(self) -> str:
        if self.family is EntropyFamily.SHANNON:
            return "shannon"
        return f"{self.family.value}:{self.order:g}"

    def with_order(self, order: float) -> "EntropySpec":
        if self.family is EntropyFamily.SHANNON:
            return self
        return EntropySpec(self.family, order)


class TimeCategory(Enum):
    """Execution-time class: Low < 30 s <= Medium <= 60 s < High."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


Threshold = Union[int, Tuple[int, int]]


@dataclass(frozen=True)
class ThresholdResult:
    """Maximum-entropy threshold; curve and candidates are empty for 2D searches."""

    threshold: Threshold
    objective: float
    objective_curve: Tuple[float, ...] = ()
    candidates: Tuple[int, ...] = ()

    @property
    def is_two_dimensional(self) -> bool:
        return isinstance(self.threshold, tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "threshold": list(self.threshold) if self.is_two_dimensional else self.threshold,
            "objective": self.objective,
            "objective_curve": list(self.objective_curve),
            "candidates": list(self.candidates),
        }


@dataclass(frozen=True)
class TransformParams:
    """Rigid transform: rotation theta about the image center, then (dx, dy)."""

    dx: float = 0.0
    dy: float = 0.0
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not (-math.pi < self.theta <= math.pi):
            raise ParameterRangeError(f"theta must lie in (-pi, pi], got {self.theta}")

    @classmethod
    def identity(cls) -> "TransformParams":
        return cls()

    def validate_for(self, width: int, height: int) -> None:
        if abs(self.dx) >= width or abs(self.dy) >= height:
            raise ParameterRangeError(
                f"translation ({self.dx}, {self.dy}) exceeds image size {width}x{height}"
            )

    def matrix(self) -> np.ndarray:
        cos_t, sin_t = math.cos(self.theta), math.sin(self.theta)
        return np.array([[cos_t, -sin_t], [sin_t, cos_t]])

    def apply(
        self,
        points: npt.ArrayLike,
        center: Tuple[float, float] = (0.0, 0.0),
    ) -> np.ndarray:
        """Map (x, y) points forward through the transform."""
        pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        c = np.asarray(center, dtype=np.float64)
        return (pts - c) @ self.matrix().T + c + np.array([self.dx, self.dy])

    def inverse(self) -> "TransformParams":
        back = np.array([[math.cos(self.theta), math.sin(self.theta)],
                         [-math.sin(self.theta), math.cos(self.theta)]])
        tx, ty = -(back @ np.array([self.dx, self.dy]))
        theta = -self.theta if self.theta != math.pi else math.pi
        return TransformParams(float(tx), float(ty), theta)

    def sort_key(self) -> Tuple[float, float, float]:
        return (self.dx, self.dy, self.theta)

    def to_dict(self) -> Dict[str, float]:
        return {"dx": self.dx, "dy": self.dy, "theta": self.theta}


@dataclass(frozen=True)
class SearchConfig:
    """Registration search: +/-window integer grid x rotations, then refinement."""

    window: int = DEFAULT_SEARCH_WINDOW
    rotations: Tuple[float, ...] = (0.0,)
    bins: int = DEFAULT_MI_BINS
    refine: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if self.window < 0:
            raise ParameterRangeError(f"search window must be >= 0, got {self.window}")
        if not self.rotations:
            raise ParameterRangeError("rotation set must not be empty")
        if self.workers < 1:
            raise ParameterRangeError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class RegistrationResult:
    params: TransformParams
    mi: float
    nccc: float
    evaluations: int
    wall_time: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.params.to_dict(),
            "mi": self.mi,
            "nccc": self.nccc,
            "evaluations": self.evaluations,
            "wall_time": self.wall_time,
        }


@dataclass(frozen=True)
class ClusterOptions:
    max_sweeps: int = DEFAULT_MAX_SWEEPS
    # bins of the plug-in histograms used by the Shannon/Tsallis CEF
    histogram_bins: int = DEFAULT_CEF_HISTOGRAM_BINS

    def __post_init__(self) -> None:
        if self.max_sweeps < 1:
            raise ParameterRangeError(f"max_sweeps must be >= 1, got {self.max_sweeps}")
        if self.histogram_bins < 2:
            raise ParameterRangeError(f"histogram_bins must be >= 2, got {self.histogram_bins}")


@dataclass(frozen=True, eq=False)
class Labeling:
    """Cluster assignment plus the run metadata of the producing search."""

    labels: np.ndarray
    k: int
    sweeps: int = 0
    converged: bool = True
    cef_history: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64).ravel()
        if self.k < 1:
            raise ParameterRangeError(f"k must be >= 1, got {self.k}")
        if labels.size and (labels.min() < 0 or labels.max() >= self.k):
            raise ParameterRangeError(f"cluster ids must lie in [0, {self.k})")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return int(self.labels.size)

    def cluster_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)

    def uses_every_cluster(self) -> bool:
        return bool(np.all(self.cluster_sizes() > 0))


@dataclass(frozen=True)
class ReportRow:
    """One metric value produced by one pipeline run."""

    experiment: str
    family: str
    order: float
    sweep: str
    metric: str
    value: float
    wall_time: Optional[float] = None
    time_category: Optional[TimeCategory] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "family": self.family,
            "order": self.order,
            "sweep": self.sweep,
            "metric": self.metric,
            "value": self.value,
            "wall_time": self.wall_time,
            "time_category": self.time_category.value if self.time_category else None,
        }


@dataclass
class ExperimentOutcome:
    """All rows and images produced by one experiment x family x sweep point."""

    experiment: str
    spec: EntropySpec
    sweep: str
    metrics: Dict[str, float] = field(default_factory=dict)
    wall_time: float = 0.0
    images: Dict[str, Any] = field(default_factory=dict)
