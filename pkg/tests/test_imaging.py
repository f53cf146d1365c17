import numpy as np
import pytest

from entropy.functionals import mutual_information, shannon_entropy
from errors import BadWindowError, DimensionMismatchError, ExcessiveShiftError, ParameterRangeError
from imaging.histograms import gray_localmean_histogram, histogram, joint_histogram
from imaging.image import GrayImage
from imaging.transforms import degrade, local_mean, shift_image, upsample
from models import EntropySpec


def _random_image(width, height, seed):
    rng = np.random.default_rng(seed)
    return GrayImage.from_array(rng.integers(0, 256, size=(height, width)))


def test_gray_image_validates_contents():
    with pytest.raises(DimensionMismatchError, match="pixel count"):
        GrayImage(2, 2, [0, 1, 2])
    with pytest.raises(ParameterRangeError, match=r"\[0, 255\]"):
        GrayImage(1, 1, [256])
    with pytest.raises(ParameterRangeError, match="positive"):
        GrayImage(0, 1, [])


def test_gray_image_is_immutable_and_compares_by_value():
    img = GrayImage(2, 1, [3, 4])

    assert img == GrayImage.from_array([[3, 4]])
    assert img.center == (0.5, 0.0)
    with pytest.raises(ValueError):
        img.pixels[0, 0] = 9


def test_histogram_counts_gray_levels():
    constant = histogram(GrayImage.filled(4, 4, 7))
    pair = histogram(GrayImage(2, 1, [0, 255]))

    assert constant.counts[7] == 16
    assert constant.total == 16
    assert constant.occupied_levels() == 1
    assert pair.counts[0] == 1 and pair.counts[255] == 1


def test_histogram_mass_is_conserved():
    img = _random_image(13, 9, seed=1)

    assert histogram(img).total == img.size
    assert gray_localmean_histogram(img, 3).total == img.size
    assert joint_histogram(img, img).total == img.size


def test_gray_localmean_histogram_constant_image():
    counts = gray_localmean_histogram(GrayImage.filled(5, 5, 90), 3).counts

    assert counts[90, 90] == 25
    assert np.count_nonzero(counts) == 1


def test_gray_localmean_histogram_single_bright_pixel():
    img = GrayImage(3, 3, [0, 0, 0, 0, 255, 0, 0, 0, 0])

    counts = gray_localmean_histogram(img, 3).counts

    assert counts[255, 28] == 1
    assert counts[255].sum() == 1


def test_gray_localmean_histogram_row_marginal_is_histogram():
    img = _random_image(20, 16, seed=2)

    joint = gray_localmean_histogram(img, 5)

    assert np.array_equal(joint.row_counts(), histogram(img).counts)


def test_local_mean_rejects_bad_windows():
    img = GrayImage.filled(4, 4, 1)

    with pytest.raises(BadWindowError, match="odd"):
        local_mean(img, 2)
    with pytest.raises(BadWindowError, match="exceeds"):
        local_mean(img, 5)


def test_joint_histogram_pairs():
    img = _random_image(10, 10, seed=3)
    zeros, whites = GrayImage.filled(3, 2, 0), GrayImage.filled(3, 2, 255)

    assert joint_histogram(img, img).is_diagonal()
    assert joint_histogram(zeros, whites).counts[0, 255] == 6
    with pytest.raises(DimensionMismatchError):
        joint_histogram(img, zeros)


def test_identity_pair_mutual_information_is_marginal_entropy():
    img = _random_image(24, 24, seed=4)

    mi = mutual_information(joint_histogram(img, img).to_probability_table(), EntropySpec.shannon())

    assert mi == pytest.approx(shannon_entropy(histogram(img).to_probability()), abs=1e-9)


def test_joint_histogram_quantize_merges_levels():
    img = _random_image(16, 16, seed=5)
    joint = joint_histogram(img, img)

    merged = joint.quantize(64)

    assert merged.counts.shape == (64, 64)
    assert merged.total == joint.total
    with pytest.raises(ParameterRangeError, match="divide"):
        joint.quantize(48)


def test_degrade_block_means():
    img = GrayImage(2, 2, [0, 0, 255, 255])

    assert degrade(img, 1) == img
    assert degrade(img, 2).pixels.tolist() == [[128]]
    assert degrade(GrayImage.filled(6, 4, 33), 2) == GrayImage.filled(3, 2, 33)


def test_degrade_pads_remainders_and_scales_counts():
    even = _random_image(8, 8, seed=6)
    odd = _random_image(7, 5, seed=7)

    assert histogram(degrade(even, 2)).total == even.size // 4
    assert degrade(odd, 2).shape == (3, 4)
    with pytest.raises(ParameterRangeError):
        degrade(even, 0)


def test_upsample_replicates_blocks():
    img = GrayImage(2, 1, [10, 20])

    assert upsample(img, 2).pixels.tolist() == [[10, 10, 20, 20], [10, 10, 20, 20]]


def test_shift_image_moves_content_and_fills_border():
    img = GrayImage(3, 3, list(range(1, 10)))

    shifted = shift_image(img, 1, 0, fill=0)

    assert shift_image(img, 0, 0) == img
    assert shifted.pixels[:, 0].tolist() == [0, 0, 0]
    assert shifted.pixels[:, 1:].tolist() == img.pixels[:, :2].tolist()
    with pytest.raises(ExcessiveShiftError):
        shift_image(img, 3, 0)


def test_shift_round_trip_restores_interior():
    img = _random_image(32, 32, seed=8)

    restored = shift_image(shift_image(img, 4, -6), -4, 6)

    assert np.array_equal(restored.pixels[6:, :28], img.pixels[6:, :28])
    assert np.all(restored.pixels[:6, :] == 0)
