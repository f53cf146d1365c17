"""
Pixel-grid transforms: local mean, degradation, upsampling and shifting.

Edges are handled by border replication and every rounding is half-up.
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from errors import BadWindowError, ExcessiveShiftError, ParameterRangeError
from imaging.image import GrayImage
from utils.rounding import divide_round_half_up


def validate_window(img: GrayImage, window: int) -> int:
    window = int(window)
    if window < 3 or window % 2 == 0:
        raise BadWindowError(f"window must be an odd integer >= 3, got {window}")
    if window > min(img.width, img.height):
        raise BadWindowError(
            f"window {window} exceeds the smaller image side {min(img.width, img.height)}"
        )
    return window


def local_mean(img: GrayImage, window: int) -> np.ndarray:
    """Rounded window x window neighborhood mean of every pixel (int64 grid)."""
    window = validate_window(img, window)
    area = window * window
    # uniform_filter returns the mean; scaling back gives exact integer box sums
    box_mean = ndimage.uniform_filter(img.pixels.astype(np.float64), size=window, mode="nearest")
    box_sum = np.rint(box_mean * area).astype(np.int64)
    return divide_round_half_up(box_sum, area)


def degrade(img: GrayImage, factor: int) -> GrayImage:
    """Block-mean downsampling; remainders are padded by edge replication."""
    factor = int(factor)
    if factor < 1:
        raise ParameterRangeError(f"degradation factor must be >= 1, got {factor}")
    if factor == 1:
        return img

    pad_y = (-img.height) % factor
    pad_x = (-img.width) % factor
    grid = np.pad(img.as_int(), ((0, pad_y), (0, pad_x)), mode="edge")
    out_h, out_w = grid.shape[0] // factor, grid.shape[1] // factor
    block_sums = grid.reshape(out_h, factor, out_w, factor).sum(axis=(1, 3))
    return GrayImage.from_array(divide_round_half_up(block_sums, factor * factor))


def upsample(img: GrayImage, factor: int) -> GrayImage:
    """Nearest-neighbor block replication, the counterpart of ``degrade``."""
    factor = int(factor)
    if factor < 1:
        raise ParameterRangeError(f"upsampling factor must be >= 1, got {factor}")
    if factor == 1:
        return img
    return GrayImage.from_array(np.kron(img.pixels, np.ones((factor, factor), dtype=np.uint8)))


def shift_image(img: GrayImage, dx: int, dy: int, fill: int = 0) -> GrayImage:
    """Translate content by (dx, dy); the exposed border takes ``fill``."""
    dx, dy = int(dx), int(dy)
    if abs(dx) >= img.width or abs(dy) >= img.height:
        raise ExcessiveShiftError(
            f"shift ({dx}, {dy}) must be smaller than the image size {img.width}x{img.height}"
        )
    out = np.full(img.shape, fill, dtype=np.uint8)
    src = img.pixels
    h, w = img.shape
    out[max(dy, 0) : h + min(dy, 0), max(dx, 0) : w + min(dx, 0)] = src[
        max(-dy, 0) : h + min(-dy, 0), max(-dx, 0) : w + min(-dx, 0)
    ]
    return GrayImage.from_array(out)
