"""
Generalized mutual information between a master and a transformed slave.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from config import ALLOWED_MI_BINS, GRAY_LEVELS, MIN_OVERLAP_PIXELS
from entropy.functionals import mutual_information
from errors import EmptyOverlapError, ParameterRangeError
from imaging.histograms import JointHistogram, joint_histogram
from imaging.image import GrayImage
from models import EntropySpec, TransformParams
from registration.warp import sample_through


def check_bins(bins: int) -> int:
    if bins not in ALLOWED_MI_BINS:
        raise ParameterRangeError(f"bins must be one of {sorted(ALLOWED_MI_BINS)}, got {bins}")
    return int(bins)


def align_slave(
    master: GrayImage,
    slave: GrayImage,
    params: TransformParams,
) -> Tuple[GrayImage, np.ndarray]:
    """Slave resampled onto the master grid, plus the overlap mask."""
    values, overlap = sample_through(slave, params, master.shape, master.center)
    return GrayImage.from_array(values), overlap


def overlap_histogram(
    master: GrayImage,
    slave: GrayImage,
    params: TransformParams,
    bins: int,
) -> JointHistogram:
    aligned, overlap = align_slave(master, slave, params)
    covered = int(overlap.sum())
    if covered < MIN_OVERLAP_PIXELS:
        raise EmptyOverlapError(
            f"overlap of {covered} pixels is below the {MIN_OVERLAP_PIXELS}-pixel minimum"
        )
    pairs = joint_histogram(master, aligned, mask=overlap)
    return pairs if bins == GRAY_LEVELS else pairs.quantize(bins)


def mi_score(
    master: GrayImage,
    slave: GrayImage,
    params: TransformParams,
    spec: EntropySpec,
    bins: int,
) -> float:
    """MI of the overlap-only joint histogram after quantizing to ``bins`` levels."""
    pairs = overlap_histogram(master, slave, params, check_bins(bins))
    return mutual_information(pairs.to_probability_table(), spec)
