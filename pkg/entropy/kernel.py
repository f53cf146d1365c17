"""
Parzen-window estimators built on Gaussian pairwise sums.

The kernel is the isotropic Gaussian with covariance 2 sigma^2 I, i.e. the
convolution of two sigma-wide Parzen windows.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import cdist

from errors import DimensionMismatchError, EmptySamplesError, InvalidBandwidthError


def as_samples(samples: npt.ArrayLike) -> np.ndarray:
    """Coerce scalars-per-sample or vectors-per-sample into an (N, d) array."""
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise EmptySamplesError("at least one sample is required")
    if not np.all(np.isfinite(arr)):
        raise EmptySamplesError("samples must be finite")
    return arr


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not sigma > 0 or not math.isfinite(sigma):
        raise InvalidBandwidthError(f"sigma must be positive, got {sigma}")
    return sigma


def kernel_peak(sigma: float, dim: int) -> float:
    """G(0; 2 sigma^2 I) in ``dim`` dimensions."""
    sigma = _check_sigma(sigma)
    return (4.0 * math.pi * sigma * sigma) ** (-dim / 2.0)


def gaussian_kernel_matrix(a: npt.ArrayLike, b: npt.ArrayLike, sigma: float) -> np.ndarray:
    xa, xb = as_samples(a), as_samples(b)
    if xa.shape[1] != xb.shape[1]:
        raise DimensionMismatchError(
            f"sample dimensions differ: {xa.shape[1]} vs {xb.shape[1]}"
        )
    sigma = _check_sigma(sigma)
    sq_dist = cdist(xa, xb, metric="sqeuclidean")
    return kernel_peak(sigma, xa.shape[1]) * np.exp(-sq_dist / (4.0 * sigma * sigma))


def information_potential(samples: npt.ArrayLike, sigma: float) -> float:
    """(1/N^2) sum_i sum_j G(x_i - x_j; 2 sigma^2 I)."""
    x = as_samples(samples)
    return float(gaussian_kernel_matrix(x, x, sigma).mean())


def cross_information_potential(a: npt.ArrayLike, b: npt.ArrayLike, sigma: float) -> float:
    """(1/(N_a N_b)) sum over a x b of the kernel."""
    return float(gaussian_kernel_matrix(a, b, sigma).mean())


def renyi_quadratic_entropy(samples: npt.ArrayLike, sigma: float) -> float:
    return -math.log(information_potential(samples, sigma))
