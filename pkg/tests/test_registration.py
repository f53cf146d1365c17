import math

import numpy as np
import pytest

from entropy.functionals import entropy
from errors import EmptyOverlapError, EmptyPointsError, ParameterRangeError
from imaging.histograms import histogram
from imaging.image import GrayImage
from imaging.synthetic import add_gaussian_noise, synth_texture
from imaging.transforms import degrade, shift_image, upsample
from models import EntropySpec, SearchConfig, TransformParams
from registration import (
    align_slave,
    control_points,
    mi_score,
    register,
    rmse_control_points,
    warp,
    warp_with_mask,
)


def _texture(size=64, smoothness=2.0, seed=11):
    return synth_texture(size, size, smoothness, seed)


def _planted_pair(dx=5, dy=-3, noise=2.0, seed=11):
    master = _texture(seed=seed)
    slave = add_gaussian_noise(shift_image(master, dx, dy), noise, seed + 1)
    return master, slave


def test_warp_identity_returns_same_image():
    img = _texture(size=17)

    out, valid = warp_with_mask(img, TransformParams.identity())

    assert out == img
    assert valid.all()


def test_integer_warp_matches_shift_image():
    img = _texture(size=24)

    assert warp(img, TransformParams(3.0, -2.0)) == shift_image(img, 3, -2)
    assert warp(img, TransformParams(-5.0, 4.0)) == shift_image(img, -5, 4)


def test_half_turn_twice_restores_the_image():
    for size in (15, 16):
        img = _texture(size=size)
        half_turn = TransformParams(0.0, 0.0, math.pi)

        flipped = warp(img, half_turn)

        assert np.array_equal(flipped.pixels, img.pixels[::-1, ::-1])
        assert warp(flipped, half_turn) == img


def test_align_slave_reports_overlap():
    master = _texture(size=20)

    aligned, overlap = align_slave(master, master, TransformParams(4.0, 0.0))

    assert overlap.sum() == 16 * 20
    assert not overlap[:, 16:].any()
    assert np.array_equal(aligned.pixels[:, :16], master.pixels[:, 4:])


def test_mi_of_image_with_itself_is_its_entropy():
    img = _texture(size=32)
    for spec in (EntropySpec.shannon(), EntropySpec.renyi(2.0), EntropySpec.tsallis(2.0)):
        expected = entropy(histogram(img).to_probability(), spec)

        assert mi_score(img, img, TransformParams.identity(), spec, 256) == pytest.approx(expected)


def test_mi_against_constant_slave_is_zero():
    master = _texture(size=32)
    constant = GrayImage.filled(32, 32, 90)

    for spec in (EntropySpec.shannon(), EntropySpec.renyi(0.5)):
        score = mi_score(master, constant, TransformParams.identity(), spec, 64)
        assert score == pytest.approx(0.0, abs=1e-9)


def test_mi_peaks_at_planted_shift():
    master = _texture()
    slave = shift_image(master, 5, -3)
    spec = EntropySpec.shannon()

    scores = {
        (dx, dy): mi_score(master, slave, TransformParams(float(dx), float(dy)), spec, 32)
        for dx in range(-10, 11)
        for dy in range(-10, 11)
    }

    assert max(scores, key=scores.get) == (5, -3)


def test_mi_rejects_small_overlap_and_bad_bins():
    img = _texture(size=64)

    with pytest.raises(EmptyOverlapError, match="minimum"):
        mi_score(img, img, TransformParams(62.0, 62.0), EntropySpec.shannon(), 64)
    with pytest.raises(ParameterRangeError, match="bins"):
        mi_score(img, img, TransformParams.identity(), EntropySpec.shannon(), 100)


def test_register_identity_pair():
    img = _texture()

    result = register(img, img, EntropySpec.shannon(), SearchConfig(window=4, bins=32))

    assert result.params.dx == pytest.approx(0.0, abs=0.5)
    assert result.params.dy == pytest.approx(0.0, abs=0.5)
    assert result.nccc == pytest.approx(1.0)
    assert result.evaluations >= 81


def test_register_recovers_planted_shift_for_each_family():
    master, slave = _planted_pair()
    for spec in (EntropySpec.shannon(), EntropySpec.renyi(2.0), EntropySpec.tsallis(2.0)):
        result = register(master, slave, spec, SearchConfig(window=8, bins=32))

        assert abs(result.params.dx - 5) <= 0.5
        assert abs(result.params.dy + 3) <= 0.5
        assert result.nccc >= 0.99


def test_self_registration_is_identity_for_every_family():
    for seed in range(20):
        img = synth_texture(32, 32, 2.0, seed)
        for spec in (EntropySpec.shannon(), EntropySpec.renyi(2.0), EntropySpec.tsallis(2.0)):
            result = register(img, img, spec, SearchConfig(window=2, bins=32))

            assert result.params == TransformParams.identity(), (seed, spec.label)
            assert result.nccc == pytest.approx(1.0)


def test_register_recovers_planted_shifts_under_strong_noise():
    master = synth_texture(128, 128, 2.0, rng_seed=17)
    config = SearchConfig(window=16, bins=64)
    for dx, dy in ((5, -3), (-7, 2), (0, 11)):
        slave = add_gaussian_noise(shift_image(master, dx, dy), 10.0, rng_seed=18)
        for spec in (EntropySpec.shannon(), EntropySpec.renyi(2.0), EntropySpec.tsallis(2.0)):
            result = register(master, slave, spec, config)

            assert abs(result.params.dx - dx) <= 0.5, (dx, dy, spec.label)
            assert abs(result.params.dy - dy) <= 0.5, (dx, dy, spec.label)
            assert result.nccc >= 0.99, (dx, dy, spec.label)


def test_register_with_degraded_slave():
    master = _texture(smoothness=3.0)
    slave = upsample(degrade(shift_image(master, 4, 2), 2), 2)

    result = register(master, slave, EntropySpec.shannon(), SearchConfig(window=8, bins=32))

    assert abs(result.params.dx - 4) <= 1.0
    assert abs(result.params.dy - 2) <= 1.0


def test_register_is_independent_of_worker_count():
    master, slave = _planted_pair(seed=21)
    spec = EntropySpec.renyi(2.0)

    serial = register(master, slave, spec, SearchConfig(window=6, bins=32, workers=1))
    threaded = register(master, slave, spec, SearchConfig(window=6, bins=32, workers=4))

    assert threaded.params == serial.params
    assert threaded.mi == serial.mi
    assert threaded.evaluations == serial.evaluations


def test_register_without_refinement_stays_on_integer_grid():
    master, slave = _planted_pair()

    result = register(
        master, slave, EntropySpec.shannon(), SearchConfig(window=6, bins=32, refine=False)
    )

    assert result.params == TransformParams(5.0, -3.0, 0.0)
    assert result.evaluations == 13 * 13


def test_register_rejects_bad_bins():
    img = _texture(size=32)

    with pytest.raises(ParameterRangeError, match="bins"):
        register(img, img, EntropySpec.shannon(), SearchConfig(window=2, bins=48))


def test_rmse_control_points():
    points = [[0, 0], [10, 0], [0, 10], [10, 10]]
    identity = TransformParams.identity()

    assert rmse_control_points(identity, identity, points) == 0.0
    assert rmse_control_points(TransformParams(3.0, 4.0), identity, points) == pytest.approx(5.0)
    half_turn = TransformParams(0.0, 0.0, math.pi)
    assert rmse_control_points(half_turn, identity, [[1, 0]]) == pytest.approx(2.0)
    with pytest.raises(EmptyPointsError):
        rmse_control_points(identity, identity, [])


def test_control_points_are_corners_and_center():
    points = control_points(GrayImage.filled(5, 3, 0))

    assert points.shape == (5, 2)
    assert points[:4].tolist() == [[0.0, 0.0], [4.0, 0.0], [0.0, 2.0], [4.0, 2.0]]
    assert points[-1].tolist() == [(5 - 1) / 2, (3 - 1) / 2]
