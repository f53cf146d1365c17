"""
Rounding Utilities

Every gray value produced by entrosense is rounded half-up.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt


def round_half_up(value: float) -> int:
    """Round a scalar to the nearest integer, halves away from -inf."""
    return int(np.floor(value + 0.5))


def round_half_up_array(values: npt.ArrayLike) -> np.ndarray:
    return np.floor(np.asarray(values, dtype=np.float64) + 0.5).astype(np.int64)


def divide_round_half_up(numerator: npt.ArrayLike, denominator: int) -> np.ndarray:
    """Exact integer round-half-up of numerator / denominator (denominator > 0)."""
    num = np.asarray(numerator, dtype=np.int64)
    return (2 * num + denominator) // (2 * denominator)
