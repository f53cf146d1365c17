import numpy as np
import pytest

from analyzers.accuracy import AUTO_MAPPING, confusion, kappa
from clustering import (
    FeatureSet,
    cef,
    cluster,
    default_bandwidth,
    features_from_image,
    image_to_labels,
    labels_to_image,
)
from clustering.entropic import label_levels
from entropy.kernel import kernel_peak
from errors import (
    DimensionMismatchError,
    EmptySamplesError,
    InvalidBandwidthError,
    ParameterRangeError,
    SingletonClusterError,
)
from imaging.image import GrayImage
from imaging.synthetic import synth_blobs
from models import ClusterOptions, EntropySpec, Labeling

FAMILIES = (EntropySpec.renyi(2.0), EntropySpec.shannon(), EntropySpec.tsallis(2.0))


def _co_membership(labels):
    labels = np.asarray(labels)
    return labels[:, None] == labels[None, :]


def _two_blobs(seed=3):
    return synth_blobs([[0.0], [100.0]], per_blob=20, sigma=5.0, rng_seed=seed)


def test_feature_set_validation():
    assert FeatureSet([1.0, 2.0, 3.0]).dim == 1
    with pytest.raises(DimensionMismatchError, match="1-3"):
        FeatureSet(np.zeros((4, 4)))
    with pytest.raises(EmptySamplesError):
        FeatureSet([])
    with pytest.raises(EmptySamplesError, match="finite"):
        FeatureSet([0.0, np.nan])
    with pytest.raises(DimensionMismatchError):
        FeatureSet([0.0, 1.0, 2.0], source=(2, 2))


def test_features_from_image_scales_to_unit_range():
    img = GrayImage.from_array([[0, 255, 51], [102, 0, 255]])

    plain = features_from_image(img)
    with_coords = features_from_image(img, with_coords=True)

    assert plain.source == (3, 2)
    assert plain.points[:, 0].tolist() == pytest.approx([0.0, 1.0, 0.2, 0.4, 0.0, 1.0])
    assert with_coords.dim == 3
    assert with_coords.points[2].tolist() == pytest.approx([0.2, 1.0, 0.0])
    assert with_coords.points[3].tolist() == pytest.approx([0.4, 0.0, 1.0])


def test_default_bandwidth():
    assert default_bandwidth(FeatureSet([0.0, 10.0, 4.0])) == pytest.approx(1.0)
    assert default_bandwidth(FeatureSet([5.0, 5.0])) == pytest.approx(0.1)


def test_well_separated_blobs_are_recovered_exactly():
    specs = FAMILIES + (EntropySpec.renyi(0.5), EntropySpec.tsallis(0.5))
    for seed in range(5):
        points, truth = _two_blobs(seed=seed)
        for spec in specs:
            result = cluster(points, 2, spec=spec)

            assert result.uses_every_cluster()
            assert result.converged
            agreement = kappa(confusion(truth, result.labels, mapping=AUTO_MAPPING))
            assert agreement == 1.0, (seed, spec.label)


def test_histogram_cef_is_lowest_for_the_true_partition():
    points, truth = _two_blobs(seed=3)
    features = FeatureSet(points)
    tail = int(np.argmax(points[:20, 0]))
    moved = truth.copy()
    moved[tail] = 1
    for spec in (EntropySpec.shannon(), EntropySpec.tsallis(2.0), EntropySpec.tsallis(0.5)):
        exact = cef(features, Labeling(truth, 2), 1.0, spec)

        assert exact < cef(features, Labeling(moved, 2), 1.0, spec), spec.label
        assert exact < cef(features, Labeling(np.arange(40) % 2, 2), 1.0, spec), spec.label


def test_each_point_its_own_cluster_is_a_fixed_point():
    points = np.array([[0.0], [1.0], [3.0], [7.0], [12.0]])

    result = cluster(points, 5, sigma=1.0)

    assert sorted(result.labels.tolist()) == [0, 1, 2, 3, 4]
    assert result.sweeps == 1
    assert result.converged


def test_partition_does_not_depend_on_point_order():
    points, _ = _two_blobs(seed=8)
    order = np.random.default_rng(4).permutation(len(points))

    direct = cluster(points, 2)
    shuffled = cluster(points[order], 2)

    restored = np.empty_like(shuffled.labels)
    restored[order] = shuffled.labels
    assert np.array_equal(_co_membership(direct.labels), _co_membership(restored))


def test_cef_never_increases_across_sweeps():
    rng = np.random.default_rng(17)
    for _ in range(50):
        points = rng.normal(0.0, 1.0, size=(30, 2))
        for spec in FAMILIES:
            history = cluster(points, 3, sigma=0.5, spec=spec).cef_history

            for before, after in zip(history, history[1:]):
                assert after <= before + 1e-12 * max(1.0, abs(before))


def test_final_history_entry_matches_cef():
    points, _ = _two_blobs(seed=5)
    features = FeatureSet(points)
    for spec in FAMILIES:
        result = cluster(features, 2, sigma=4.0, spec=spec)

        assert cef(features, result, 4.0, spec) == pytest.approx(result.cef_history[-1])


def test_sweeps_respect_the_cap():
    points = np.random.default_rng(2).normal(size=(40, 2))

    result = cluster(points, 4, sigma=0.3, opts=ClusterOptions(max_sweeps=1))

    assert result.sweeps == 1
    assert len(result.cef_history) == 2


def test_cef_is_symmetric_under_relabeling():
    points = FeatureSet(np.random.default_rng(9).normal(size=(24, 2)))
    labels = np.arange(24) % 3
    relabel = np.array([2, 0, 1])
    for spec in FAMILIES:
        original = cef(points, Labeling(labels, 3), 0.7, spec)
        swapped = cef(points, Labeling(relabel[labels], 3), 0.7, spec)

        assert swapped == pytest.approx(original, rel=1e-9)


def test_separated_clusters_have_vanishing_cef():
    points = FeatureSet([[0.0], [0.1], [50.0], [50.1]])

    value = cef(points, Labeling([0, 0, 1, 1], 2), 0.5, EntropySpec.renyi(2.0))

    assert value == pytest.approx(0.0, abs=1e-12)


def test_co_located_clusters_reach_the_kernel_peak():
    points = FeatureSet(np.full((4, 2), 3.0))

    value = cef(points, Labeling([0, 0, 1, 1], 2), 0.8, EntropySpec.renyi(2.0))

    assert value == pytest.approx(kernel_peak(0.8, 2))


def test_translation_leaves_renyi_cef_and_partition_unchanged():
    points, _ = synth_blobs([[0.0, 0.0], [10.0, 10.0]], per_blob=15, sigma=1.0, rng_seed=6)
    moved = points + np.array([250.0, -40.0])
    labels = Labeling(np.arange(30) % 2, 2)
    spec = EntropySpec.renyi(2.0)

    assert cef(FeatureSet(moved), labels, 2.0, spec) == pytest.approx(
        cef(FeatureSet(points), labels, 2.0, spec), rel=1e-9
    )
    assert np.array_equal(
        _co_membership(cluster(points, 2, sigma=2.0).labels),
        _co_membership(cluster(moved, 2, sigma=2.0).labels),
    )


def test_labels_to_image_levels_and_round_trip():
    labels = Labeling([0, 1, 2, 2, 1, 0], 3)

    img = labels_to_image(labels, (3, 2))

    assert label_levels(3).tolist() == [0, 128, 255]
    assert sorted(set(img.pixels.ravel().tolist())) == [0, 128, 255]
    assert image_to_labels(img, 3).labels.tolist() == labels.labels.tolist()


def test_image_to_labels_snaps_to_nearest_level():
    img = GrayImage.from_array([[10, 120, 200, 250]])

    assert image_to_labels(img, 3).labels.tolist() == [0, 1, 2, 2]


def test_cluster_rejects_bad_arguments():
    points = np.arange(6, dtype=float)

    with pytest.raises(SingletonClusterError):
        cluster(points, 1)
    with pytest.raises(ParameterRangeError, match="clusters"):
        cluster(points, 7)
    with pytest.raises(InvalidBandwidthError):
        cluster(points, 2, sigma=0.0)
    with pytest.raises(DimensionMismatchError):
        labels_to_image(Labeling([0, 1, 1], 2), (2, 2))
