"""Entrosense grayscale imaging."""

from imaging.histograms import (
    Histogram,
    JointHistogram,
    gray_localmean_histogram,
    histogram,
    joint_histogram,
)
from imaging.image import GrayImage
from imaging.pgm import load_pgm, read_pgm, save_pgm, write_pgm
from imaging.synthetic import (
    add_gaussian_noise,
    add_salt_pepper,
    synth_bimodal,
    synth_blobs,
    synth_regions,
    synth_texture,
)
from imaging.transforms import degrade, local_mean, shift_image, upsample

__all__ = [
    "GrayImage",
    "Histogram",
    "JointHistogram",
    "add_gaussian_noise",
    "add_salt_pepper",
    "degrade",
    "gray_localmean_histogram",
    "histogram",
    "joint_histogram",
    "load_pgm",
    "local_mean",
    "read_pgm",
    "save_pgm",
    "shift_image",
    "synth_bimodal",
    "synth_blobs",
    "synth_regions",
    "synth_texture",
    "upsample",
    "write_pgm",
]
