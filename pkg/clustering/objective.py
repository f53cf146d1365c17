"""
Cluster evaluation functions (CEF), lower is better.

Renyi: sum over cluster pairs of the cross information potential, always in
its quadratic kernel form. Shannon and Tsallis: S(bin, cluster) - S(bin) -
S(cluster) over plug-in histograms of the first feature column, the negative
of the information the clusters carry about the values.

Trial moves update cached sums or counts, so the relabeling sweep never
rebuilds an objective per candidate.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np
import numpy.typing as npt

from clustering.features import FeatureSet
from entropy.distributions import ProbabilityVector
from entropy.functionals import entropy
from entropy.kernel import gaussian_kernel_matrix
from errors import DimensionMismatchError, InvalidBandwidthError, SingletonClusterError
from models import ClusterOptions, EntropyFamily, EntropySpec, Labeling


def _check_k(k: int) -> None:
    if k < 2:
        raise SingletonClusterError(f"cluster evaluation needs k >= 2, got {k}")


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not sigma > 0 or not math.isfinite(sigma):
        raise InvalidBandwidthError(f"sigma must be positive, got {sigma}")
    return sigma


class ClusterObjective(ABC):
    """Mutable CEF state for one labeling."""

    def __init__(self, labels: npt.ArrayLike, k: int):
        _check_k(k)
        self.k = k
        self.labels = np.array(labels, dtype=np.int64)
        self.sizes = np.bincount(self.labels, minlength=k).astype(np.int64)

    @abstractmethod
    def value(self) -> float:
        """Current CEF."""

    @abstractmethod
    def trial(self, index: int, target: int) -> float:
        """CEF if point ``index`` moved to cluster ``target``."""

    @abstractmethod
    def commit(self, index: int, target: int) -> None:
        """Apply the move."""

    @abstractmethod
    def rebuild(self) -> None:
        """Recompute cached sums from the labels."""


class KernelObjective(ClusterObjective):
    def __init__(self, kernel: np.ndarray, labels: npt.ArrayLike, k: int):
        super().__init__(labels, k)
        self.kernel = kernel
        self.rebuild()

    def rebuild(self) -> None:
        onehot = np.zeros((self.labels.size, self.k))
        onehot[np.arange(self.labels.size), self.labels] = 1.0
        # (N, k) per-point sums toward every cluster, and k x k pair sums
        self._toward = self.kernel @ onehot
        self._pairs = onehot.T @ self._toward
        self.sizes = np.bincount(self.labels, minlength=self.k).astype(np.int64)

    @staticmethod
    def _cef(pairs: np.ndarray, sizes: np.ndarray) -> float:
        total = 0.0
        k = sizes.size
        for m in range(k):
            for n in range(m + 1, k):
                if sizes[m] and sizes[n]:
                    total += pairs[m, n] / (float(sizes[m]) * float(sizes[n]))
        return total

    def value(self) -> float:
        return self._cef(self._pairs, self.sizes)

    def _moved(self, index: int, target: int):
        source = int(self.labels[index])
        row = self._toward[index]
        self_term = self.kernel[index, index]
        pairs = self._pairs.copy()
        sizes = self.sizes.copy()

        pairs[source, :] -= row
        pairs[:, source] -= row
        pairs[target, :] += row
        pairs[:, target] += row
        # the point's own diagonal term moves from (source, source) to (target, target)
        pairs[source, source] += self_term
        pairs[target, target] += self_term
        pairs[source, target] -= self_term
        pairs[target, source] -= self_term
        sizes[source] -= 1
        sizes[target] += 1
        return pairs, sizes

    def trial(self, index: int, target: int) -> float:
        pairs, sizes = self._moved(index, target)
        return self._cef(pairs, sizes)

    def commit(self, index: int, target: int) -> None:
        source = int(self.labels[index])
        self._pairs, self.sizes = self._moved(index, target)
        column = self.kernel[:, index]
        self._toward[:, source] -= column
        self._toward[:, target] += column
        self.labels[index] = target


class HistogramObjective(ClusterObjective):
    """Negative generalized mutual information between value bins and clusters.

    CEF = S(bin, cluster) - S(bin) - S(cluster) over plug-in histograms. For
    Shannon this is sum_m (N_m / N) H(m) - H(all); for Tsallis the joint term
    splits pseudo-additively into S(cluster) + sum_m (N_m / N)^q S(m).
    """

    def __init__(
        self,
        values: np.ndarray,
        labels: npt.ArrayLike,
        k: int,
        spec: EntropySpec,
        bins: int,
    ):
        super().__init__(labels, k)
        self.spec = spec
        self.bins = bins
        self.bin_index = _bin_values(values, bins)
        merged = np.bincount(self.bin_index, minlength=bins)
        self._merged_entropy = entropy(ProbabilityVector(merged), spec)
        self.rebuild()

    def rebuild(self) -> None:
        self._counts = np.zeros((self.k, self.bins), dtype=np.int64)
        np.add.at(self._counts, (self.labels, self.bin_index), 1)
        self.sizes = self._counts.sum(axis=1)

    def _cef(self, counts: np.ndarray, sizes: np.ndarray) -> float:
        joint = entropy(ProbabilityVector(counts.ravel()), self.spec)
        return joint - self._merged_entropy - entropy(ProbabilityVector(sizes), self.spec)

    def value(self) -> float:
        return self._cef(self._counts, self.sizes)

    def _moved(self, index: int, target: int):
        source = int(self.labels[index])
        b = self.bin_index[index]
        counts = self._counts.copy()
        counts[source, b] -= 1
        counts[target, b] += 1
        sizes = self.sizes.copy()
        sizes[source] -= 1
        sizes[target] += 1
        return counts, sizes

    def trial(self, index: int, target: int) -> float:
        return self._cef(*self._moved(index, target))

    def commit(self, index: int, target: int) -> None:
        self._counts, self.sizes = self._moved(index, target)
        self.labels[index] = target


def _bin_values(values: np.ndarray, bins: int) -> np.ndarray:
    low, high = float(values.min()), float(values.max())
    if high == low:
        return np.zeros(values.size, dtype=np.int64)
    scaled = np.floor((values - low) / (high - low) * bins).astype(np.int64)
    return np.clip(scaled, 0, bins - 1)


def build_objective(
    features: FeatureSet,
    labels: npt.ArrayLike,
    k: int,
    sigma: float,
    spec: EntropySpec,
    opts: ClusterOptions = ClusterOptions(),
    kernel: Optional[np.ndarray] = None,
) -> ClusterObjective:
    _check_k(k)
    sigma = _check_sigma(sigma)
    labels = np.asarray(labels, dtype=np.int64).ravel()
    if labels.size != len(features):
        raise DimensionMismatchError(
            f"{labels.size} labels for {len(features)} points"
        )
    if spec.family is EntropyFamily.RENYI:
        if kernel is None:
            kernel = gaussian_kernel_matrix(features.points, features.points, sigma)
        return KernelObjective(kernel, labels, k)
    return HistogramObjective(features.points[:, 0], labels, k, spec, opts.histogram_bins)


def cef(
    points: FeatureSet,
    labels: Labeling,
    sigma: float,
    spec: EntropySpec,
    opts: ClusterOptions = ClusterOptions(),
) -> float:
    """Cluster evaluation function of ``labels`` over ``points``."""
    return build_objective(points, labels.labels, labels.k, sigma, spec, opts).value()
