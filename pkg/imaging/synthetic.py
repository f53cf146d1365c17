"""
Seeded synthetic fixtures standing in for satellite scenes.

All randomness comes from ``numpy.random.Generator`` over the PCG64 bit
generator seeded with the explicit ``rng_seed``; no call ever seeds from the
clock. Given the same seed and numpy release the output is bit-identical.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np
from scipy import ndimage, stats

from config import MAX_GRAY
from errors import ParameterRangeError
from imaging.image import GrayImage
from utils.rounding import round_half_up, round_half_up_array


def make_rng(rng_seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(rng_seed)))


def _to_gray(values: np.ndarray) -> GrayImage:
    return GrayImage.from_array(np.clip(round_half_up_array(values), 0, MAX_GRAY))


def _check_size(width: int, height: int, min_width: int = 1) -> None:
    if width < min_width or height < 1:
        raise ParameterRangeError(
            f"image must be at least {min_width}x1 pixels, got {width}x{height}"
        )


def _check_sigma(sigma: float) -> None:
    if not sigma > 0:
        raise ParameterRangeError(f"sigma must be positive, got {sigma}")


def band_edges(width: int, fractions: Sequence[float]) -> np.ndarray:
    """Column index where each band starts, plus ``width`` as the final edge."""
    cumulative = np.concatenate([[0.0], np.cumsum(fractions)])
    edges = np.array([round_half_up(width * c) for c in cumulative], dtype=np.int64)
    edges[-1] = width
    return edges


def synth_regions(
    width: int,
    height: int,
    means: Sequence[float],
    sigma: float,
    rng_seed: int,
    fractions: Sequence[float] | None = None,
) -> Tuple[GrayImage, np.ndarray]:
    """k vertical bands, band i drawn from N(means[i], sigma^2); returns image and label grid.

    Each band holds the ``count`` midpoint quantiles of its normal law in a
    seeded random order, so the seed moves pixels around but never changes
    a band's histogram.
    """
    k = len(means)
    _check_size(width, height, min_width=max(k, 1))
    _check_sigma(sigma)
    if k < 1:
        raise ParameterRangeError("at least one region mean is required")
    if any(not 0 <= m <= MAX_GRAY for m in means):
        raise ParameterRangeError("region means must lie in [0, 255]")
    fractions = list(fractions) if fractions is not None else [1.0 / k] * k
    if len(fractions) != k or any(f <= 0 for f in fractions) or abs(sum(fractions) - 1.0) > 1e-9:
        raise ParameterRangeError("fractions must be positive, one per region, and sum to 1")

    edges = band_edges(width, fractions)
    if np.any(np.diff(edges) < 1):
        raise ParameterRangeError(f"image width {width} is too small for {k} regions")

    rng = make_rng(rng_seed)
    labels = np.zeros((height, width), dtype=np.int64)
    values = np.zeros((height, width), dtype=np.float64)
    for index in range(k):
        band = (slice(None), slice(edges[index], edges[index + 1]))
        count = height * int(edges[index + 1] - edges[index])
        draws = stats.norm.ppf((np.arange(count) + 0.5) / count, loc=means[index], scale=sigma)
        labels[band] = index
        values[band] = rng.permutation(draws).reshape(height, -1)
    return _to_gray(values), labels


def synth_bimodal(
    width: int,
    height: int,
    mu1: float,
    mu2: float,
    sigma: float,
    split: float,
    rng_seed: int,
) -> Tuple[GrayImage, GrayImage]:
    """Left ``split`` fraction from N(mu1), the rest from N(mu2); mask is 255 on the mu2 side."""
    if not 0 <= mu1 < mu2 <= MAX_GRAY:
        raise ParameterRangeError(f"need 0 <= mu1 < mu2 <= 255, got {mu1}, {mu2}")
    if not 0 < split < 1:
        raise ParameterRangeError(f"split must lie in (0, 1), got {split}")
    _check_size(width, height, min_width=2)
    _check_sigma(sigma)

    left = min(max(round_half_up(split * width), 1), width - 1)
    image, labels = synth_regions(
        width, height, (mu1, mu2), sigma, rng_seed, fractions=(left / width, 1 - left / width)
    )
    mask = GrayImage.from_array(np.where(labels == 1, MAX_GRAY, 0))
    return image, mask


def synth_texture(width: int, height: int, smoothness: float, rng_seed: int) -> GrayImage:
    """Gaussian-smoothed white noise, histogram-equalized to uniform gray levels.

    Pixels are ranked by their smoothed value and the ranks split evenly over
    0..255, so every gray level holds N // 256 or N // 256 + 1 pixels.
    """
    _check_size(width, height)
    _check_sigma(smoothness)
    noise = make_rng(rng_seed).uniform(0.0, 1.0, size=(height, width))
    smooth = ndimage.gaussian_filter(noise, sigma=smoothness, mode="reflect")
    flat = smooth.ravel()
    ranks = np.empty(flat.size, dtype=np.int64)
    ranks[np.argsort(flat, kind="stable")] = np.arange(flat.size)
    levels = (ranks * (MAX_GRAY + 1)) // flat.size
    return GrayImage.from_array(levels.reshape(height, width))


def synth_blobs(
    centers: Sequence[Sequence[float]],
    per_blob: int,
    sigma: float,
    rng_seed: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """Isotropic Gaussian blobs in feature space; returns (points, labels)."""
    _check_sigma(sigma)
    if per_blob < 1 or not centers:
        raise ParameterRangeError("need at least one blob with at least one point")
    rng = make_rng(rng_seed)
    centers_arr = np.asarray(centers, dtype=np.float64).reshape(len(centers), -1)
    points = np.concatenate(
        [c + rng.normal(0.0, sigma, size=(per_blob, centers_arr.shape[1])) for c in centers_arr]
    )
    labels = np.repeat(np.arange(len(centers_arr)), per_blob)
    return points, labels


def add_gaussian_noise(img: GrayImage, sigma: float, rng_seed: int) -> GrayImage:
    if sigma < 0:
        raise ParameterRangeError(f"noise sigma must be >= 0, got {sigma}")
    if sigma == 0:
        return img
    noise = make_rng(rng_seed).normal(0.0, sigma, size=img.shape)
    return _to_gray(img.as_int() + noise)


def add_salt_pepper(img: GrayImage, amount: float, rng_seed: int) -> GrayImage:
    """Replace an ``amount`` fraction of pixels with 0 or 255 (even odds)."""
    if not 0 <= amount <= 1:
        raise ParameterRangeError(f"salt-and-pepper amount must lie in [0, 1], got {amount}")
    rng = make_rng(rng_seed)
    hit = rng.uniform(size=img.shape) < amount
    salt = rng.uniform(size=img.shape) < 0.5
    out = img.as_int()
    out[hit & salt] = MAX_GRAY
    out[hit & ~salt] = 0
    return GrayImage.from_array(out)
