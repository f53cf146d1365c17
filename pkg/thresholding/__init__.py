"""Entrosense entropic thresholding."""

from thresholding.entropic import (
    apply_threshold,
    entropic_threshold,
    entropic_threshold_2d,
    select_threshold,
)

__all__ = [
    "apply_threshold",
    "entropic_threshold",
    "entropic_threshold_2d",
    "select_threshold",
]
