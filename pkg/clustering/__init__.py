"""Entrosense information-theoretic clustering."""

from clustering.entropic import cluster, image_to_labels, labels_to_image
from clustering.features import FeatureSet, default_bandwidth, features_from_image
from clustering.objective import cef

__all__ = [
    "FeatureSet",
    "cef",
    "cluster",
    "default_bandwidth",
    "features_from_image",
    "image_to_labels",
    "labels_to_image",
]
