"""
Immutable 8-bit grayscale image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import numpy.typing as npt

from config import MAX_GRAY
from errors import DimensionMismatchError, ParameterRangeError


@dataclass(frozen=True, eq=False, init=False)
class GrayImage:
    """Row-major grid of gray values in [0, 255]; ``pixels`` has shape (height, width)."""

    width: int
    height: int
    pixels: np.ndarray

    def __init__(self, width: int, height: int, pixels: npt.ArrayLike):
        width, height = int(width), int(height)
        if width < 1 or height < 1:
            raise ParameterRangeError(f"image dimensions must be positive, got {width}x{height}")
        raw = np.asarray(pixels)
        if raw.size != width * height:
            raise DimensionMismatchError(
                f"pixel count {raw.size} does not match {width}x{height}"
            )
        if raw.size and (raw.min() < 0 or raw.max() > MAX_GRAY):
            raise ParameterRangeError("gray values must lie in [0, 255]")
        if raw.dtype.kind == "f" and not np.array_equal(raw, np.round(raw)):
            raise ParameterRangeError("gray values must be integers")
        grid = raw.astype(np.uint8).reshape(height, width).copy()
        grid.setflags(write=False)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "pixels", grid)

    @classmethod
    def from_array(cls, array: npt.ArrayLike) -> "GrayImage":
        grid = np.asarray(array)
        if grid.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got shape {grid.shape}")
        return cls(grid.shape[1], grid.shape[0], grid)

    @classmethod
    def filled(cls, width: int, height: int, value: int) -> "GrayImage":
        return cls(width, height, np.full((height, width), value, dtype=np.int64))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.height, self.width)

    @property
    def size(self) -> int:
        return self.width * self.height

    @property
    def center(self) -> Tuple[float, float]:
        """(x, y) center used as the rotation origin."""
        return ((self.width - 1) / 2.0, (self.height - 1) / 2.0)

    def as_int(self) -> np.ndarray:
        return self.pixels.astype(np.int64)

    def same_shape(self, other: "GrayImage") -> bool:
        return self.shape == other.shape

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.pixels, other.pixels)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GrayImage(width={self.width}, height={self.height})"


def require_same_shape(a: GrayImage, b: GrayImage) -> None:
    if not a.same_shape(b):
        raise DimensionMismatchError(
            f"image dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )
