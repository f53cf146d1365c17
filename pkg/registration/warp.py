"""
Rigid resampling with nearest-neighbor interpolation.

The transform T(p) = R(theta) (p - c) + c + (dx, dy) rotates about the image
center c. ``warp`` renders T applied to an image; ``sample_through`` reads an
image at T(q) for every grid point q, which is how a slave is aligned onto
its master.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from imaging.image import GrayImage
from models import TransformParams


def _grid_points(shape: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
    ys, xs = np.indices(shape, dtype=np.float64)
    return xs, ys


def _source_coordinates(
    shape: Tuple[int, int],
    params: TransformParams,
    center: Tuple[float, float],
    forward: bool,
) -> Tuple[np.ndarray, np.ndarray]:
    xs, ys = _grid_points(shape)
    mapping = params if forward else params.inverse()
    if mapping.theta == 0:
        return xs + mapping.dx, ys + mapping.dy
    cx, cy = center
    cos_t, sin_t = np.cos(mapping.theta), np.sin(mapping.theta)
    rx, ry = xs - cx, ys - cy
    return (
        cos_t * rx - sin_t * ry + cx + mapping.dx,
        sin_t * rx + cos_t * ry + cy + mapping.dy,
    )


def _nearest(
    img: GrayImage,
    src_x: np.ndarray,
    src_y: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray]:
    ix = np.floor(src_x + 0.5).astype(np.int64)
    iy = np.floor(src_y + 0.5).astype(np.int64)
    valid = (ix >= 0) & (ix < img.width) & (iy >= 0) & (iy < img.height)
    values = np.zeros(src_x.shape, dtype=np.uint8)
    values[valid] = img.pixels[iy[valid], ix[valid]]
    return values, valid


def warp_with_mask(
    img: GrayImage,
    params: TransformParams,
    fill: int = 0,
) -> Tuple[GrayImage, np.ndarray]:
    """Image of ``img`` under T (inverse-mapped) plus the mask of covered pixels."""
    src_x, src_y = _source_coordinates(img.shape, params, img.center, forward=False)
    values, valid = _nearest(img, src_x, src_y)
    values[~valid] = fill
    return GrayImage.from_array(values), valid


def warp(img: GrayImage, params: TransformParams, fill: int = 0) -> GrayImage:
    return warp_with_mask(img, params, fill)[0]


def sample_through(
    img: GrayImage,
    params: TransformParams,
    shape: Tuple[int, int],
    center: Tuple[float, float],
) -> Tuple[np.ndarray, np.ndarray]:
    """Values of ``img`` at T(q) for q over a ``shape`` grid, with the in-bounds mask."""
    src_x, src_y = _source_coordinates(shape, params, center, forward=True)
    return _nearest(img, src_x, src_y)
