"""
Discrete distributions over gray levels and gray-level pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import numpy.typing as npt

from config import PROBABILITY_TOLERANCE
from errors import InvalidDistributionError


def _normalized(weights: npt.ArrayLike, ndim: int) -> np.ndarray:
    raw = np.asarray(weights, dtype=np.float64)
    if raw.ndim != ndim:
        raise InvalidDistributionError(f"expected a {ndim}-D weight array, got shape {raw.shape}")
    if raw.size == 0:
        raise InvalidDistributionError("distribution must have at least one bin")
    if not np.all(np.isfinite(raw)):
        raise InvalidDistributionError("weights must be finite")
    if np.any(raw < 0):
        raise InvalidDistributionError("weights must be nonnegative")
    total = raw.sum()
    if total <= 0:
        raise InvalidDistributionError("weights must have a positive sum")
    probs = raw / total
    probs.setflags(write=False)
    return probs


@dataclass(frozen=True, eq=False, init=False)
class ProbabilityVector:
    """Finite discrete distribution. Raw nonnegative weights are normalized."""

    probs: np.ndarray

    def __init__(self, weights: npt.ArrayLike):
        object.__setattr__(self, "probs", _normalized(weights, 1))

    def __len__(self) -> int:
        return int(self.probs.size)

    def support(self) -> np.ndarray:
        """Positive probabilities in ascending order.

        Sorting makes every sum over the support independent of bin order.
        """
        return np.sort(self.probs[self.probs > 0])

    def __eq__(self, other: object) -> bool:
        """Same length and every bin within ``PROBABILITY_TOLERANCE``."""
        if not isinstance(other, ProbabilityVector):
            return NotImplemented
        if self.probs.shape != other.probs.shape:
            return False
        return bool(np.allclose(self.probs, other.probs, rtol=0.0, atol=PROBABILITY_TOLERANCE))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False, init=False)
class JointProbabilityTable:
    """rows x cols joint distribution."""

    probs: np.ndarray

    def __init__(self, weights: npt.ArrayLike):
        object.__setattr__(self, "probs", _normalized(weights, 2))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.probs.shape  # type: ignore[return-value]

    def row_marginal(self) -> ProbabilityVector:
        return ProbabilityVector(self.probs.sum(axis=1))

    def col_marginal(self) -> ProbabilityVector:
        return ProbabilityVector(self.probs.sum(axis=0))

    def flattened(self) -> ProbabilityVector:
        return ProbabilityVector(self.probs.ravel())

    @classmethod
    def independent(cls, rows: ProbabilityVector, cols: ProbabilityVector) -> "JointProbabilityTable":
        return cls(np.outer(rows.probs, cols.probs))
