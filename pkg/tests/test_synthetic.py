import numpy as np
import pytest
from scipy import ndimage

from errors import ParameterRangeError
from imaging.histograms import histogram
from imaging.synthetic import (
    add_gaussian_noise,
    add_salt_pepper,
    synth_bimodal,
    synth_blobs,
    synth_regions,
    synth_texture,
)


def test_bimodal_is_deterministic_per_seed():
    first, mask = synth_bimodal(32, 16, 60, 180, 12, 0.5, rng_seed=4)
    second, _ = synth_bimodal(32, 16, 60, 180, 12, 0.5, rng_seed=4)
    other, _ = synth_bimodal(32, 16, 60, 180, 12, 0.5, rng_seed=5)

    assert first == second
    assert first != other
    assert mask.size == first.size
    assert set(np.unique(mask.pixels).tolist()) == {0, 255}


def test_bimodal_tiny_sigma_gives_two_constant_regions():
    img, mask = synth_bimodal(10, 4, 64, 192, 1e-6, 0.5, rng_seed=1)

    assert set(img.pixels[:, :5].ravel().tolist()) == {64}
    assert set(img.pixels[:, 5:].ravel().tolist()) == {192}
    assert mask.pixels[:, 5:].min() == 255 and mask.pixels[:, :5].max() == 0


def test_bimodal_histogram_modes_sit_near_the_means():
    img, _ = synth_bimodal(128, 128, 64, 192, 15, 0.5, rng_seed=9)

    smooth = ndimage.gaussian_filter1d(histogram(img).counts.astype(float), 6)

    assert abs(int(np.argmax(smooth[:128])) - 64) <= 5
    assert abs(128 + int(np.argmax(smooth[128:])) - 192) <= 5


def test_bimodal_parameter_ranges():
    with pytest.raises(ParameterRangeError, match="mu1 < mu2"):
        synth_bimodal(8, 8, 200, 100, 5, 0.5, rng_seed=0)
    with pytest.raises(ParameterRangeError, match="split"):
        synth_bimodal(8, 8, 10, 100, 5, 1.0, rng_seed=0)
    with pytest.raises(ParameterRangeError, match="sigma"):
        synth_bimodal(8, 8, 10, 100, 0, 0.5, rng_seed=0)


def test_regions_return_band_labels():
    img, labels = synth_regions(12, 3, (20, 120, 220), 2.0, rng_seed=3)

    assert labels.shape == (3, 12)
    assert labels[0].tolist() == [0] * 4 + [1] * 4 + [2] * 4
    assert abs(float(img.pixels[labels == 2].mean()) - 220) < 3


def test_texture_uses_full_gray_range():
    img = synth_texture(48, 48, 2.0, rng_seed=6)

    assert img.pixels.min() == 0
    assert img.pixels.max() == 255
    assert img == synth_texture(48, 48, 2.0, rng_seed=6)


def test_texture_gray_levels_are_equalized():
    img = synth_texture(128, 128, 2.0, rng_seed=3)

    counts = histogram(img).counts

    assert set(counts.tolist()) == {64}
    assert float(img.pixels.std()) > 70
    assert img != synth_texture(128, 128, 2.0, rng_seed=4)


def test_region_histograms_do_not_depend_on_the_seed():
    first, _ = synth_bimodal(128, 128, 64, 192, 15, 0.5, rng_seed=0)
    other, _ = synth_bimodal(128, 128, 64, 192, 15, 0.5, rng_seed=2)

    counts = histogram(first).counts

    assert first != other
    assert counts.tolist() == histogram(other).counts.tolist()
    assert counts[:128].sum() == counts[128:].sum() == 128 * 64
    assert counts[123:134].sum() == 0


def test_blobs_and_noise_helpers():
    points, labels = synth_blobs([[0.0], [10.0]], per_blob=5, sigma=0.1, rng_seed=2)
    base, _ = synth_bimodal(16, 16, 60, 180, 5, 0.5, rng_seed=1)

    assert points.shape == (10, 1)
    assert labels.tolist() == [0] * 5 + [1] * 5
    assert add_gaussian_noise(base, 0, rng_seed=1) is base
    noisy = add_salt_pepper(base, 1.0, rng_seed=1)
    assert set(np.unique(noisy.pixels).tolist()) <= {0, 255}
    with pytest.raises(ParameterRangeError):
        add_salt_pepper(base, 1.5, rng_seed=1)
