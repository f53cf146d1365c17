"""
Seeded benchmark fixtures and their on-disk form.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from bench.schemas import ExperimentConfig
from errors import BenchIOError
from imaging.image import GrayImage
from imaging.pgm import save_pgm
from imaging.synthetic import (
    add_gaussian_noise,
    add_salt_pepper,
    synth_bimodal,
    synth_regions,
    synth_texture,
)
from imaging.transforms import degrade, shift_image, upsample
from models import TransformParams

logger = logging.getLogger("entrosense.bench.fixtures")

# per-fixture offsets added to the config seed
THRESHOLD_SEED_OFFSET = 0
REGISTER_SEED_OFFSET = 1000
CLUSTER_SEED_OFFSET = 2000


@dataclass(frozen=True)
class ThresholdFixture:
    image: GrayImage
    mask: GrayImage


@dataclass(frozen=True)
class RegistrationFixture:
    master: GrayImage
    slave: GrayImage
    truth: TransformParams


@dataclass(frozen=True)
class ClusterFixture:
    image: GrayImage
    labels: np.ndarray
    k: int


@dataclass(frozen=True)
class FixtureSet:
    threshold: ThresholdFixture
    register: RegistrationFixture
    cluster: ClusterFixture


def build_threshold_fixture(config: ExperimentConfig) -> ThresholdFixture:
    seed = config.seed + THRESHOLD_SEED_OFFSET
    image, mask = synth_bimodal(
        config.threshold_size,
        config.threshold_size,
        config.background_mean,
        config.foreground_mean,
        config.region_sigma,
        config.foreground_split,
        seed,
    )
    if config.salt_pepper > 0:
        image = add_salt_pepper(image, config.salt_pepper, seed + 1)
    return ThresholdFixture(image=image, mask=mask)


def build_registration_fixture(config: ExperimentConfig) -> RegistrationFixture:
    """Master texture; slave is the shifted, noisy and optionally degraded copy."""
    seed = config.seed + REGISTER_SEED_OFFSET
    size = config.register_size
    master = synth_texture(size, size, config.texture_smoothness, seed)
    slave = shift_image(master, config.shift_dx, config.shift_dy)
    slave = add_gaussian_noise(slave, config.noise_sigma, seed + 1)
    if config.degrade_factor > 1:
        slave = upsample(degrade(slave, config.degrade_factor), config.degrade_factor)
    truth = TransformParams(float(config.shift_dx), float(config.shift_dy), 0.0)
    return RegistrationFixture(master=master, slave=slave, truth=truth)


def build_cluster_fixture(config: ExperimentConfig) -> ClusterFixture:
    size = config.cluster_size
    image, labels = synth_regions(
        size,
        size,
        config.cluster_means,
        config.cluster_sigma,
        config.seed + CLUSTER_SEED_OFFSET,
    )
    return ClusterFixture(image=image, labels=labels.ravel(), k=len(config.cluster_means))


def build_fixtures(config: ExperimentConfig) -> FixtureSet:
    return FixtureSet(
        threshold=build_threshold_fixture(config),
        register=build_registration_fixture(config),
        cluster=build_cluster_fixture(config),
    )


def _labels_text(labels: np.ndarray, width: int) -> str:
    rows = labels.reshape(-1, width)
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in rows)


def _write_text(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="\n")


def gen_fixtures(config: ExperimentConfig, out_dir: Path) -> List[Dict[str, Any]]:
    """Write every fixture under ``out_dir`` plus a ``manifest.jsonl`` ground-truth sidecar."""
    fixtures = build_fixtures(config)
    out_dir = Path(out_dir)
    manifest: List[Dict[str, Any]] = [
        {
            "fixture": "threshold",
            "seed": config.seed + THRESHOLD_SEED_OFFSET,
            "width": fixtures.threshold.image.width,
            "height": fixtures.threshold.image.height,
            "files": {"image": "threshold_image.pgm", "mask": "threshold_mask.pgm"},
        },
        {
            "fixture": "register",
            "seed": config.seed + REGISTER_SEED_OFFSET,
            "width": fixtures.register.master.width,
            "height": fixtures.register.master.height,
            "shift": fixtures.register.truth.to_dict(),
            "files": {
                "master": "register_master.pgm",
                "slave": "register_slave.pgm",
                "shift": "register_shift.txt",
            },
        },
        {
            "fixture": "cluster",
            "seed": config.seed + CLUSTER_SEED_OFFSET,
            "width": fixtures.cluster.image.width,
            "height": fixtures.cluster.image.height,
            "k": fixtures.cluster.k,
            "files": {"image": "cluster_image.pgm", "labels": "cluster_labels.txt"},
        },
    ]
    truth = fixtures.register.truth
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        save_pgm(out_dir / "threshold_image.pgm", fixtures.threshold.image)
        save_pgm(out_dir / "threshold_mask.pgm", fixtures.threshold.mask)
        save_pgm(out_dir / "register_master.pgm", fixtures.register.master)
        save_pgm(out_dir / "register_slave.pgm", fixtures.register.slave)
        _write_text(out_dir / "register_shift.txt", f"{truth.dx:g} {truth.dy:g} {truth.theta:g}\n")
        save_pgm(out_dir / "cluster_image.pgm", fixtures.cluster.image)
        _write_text(
            out_dir / "cluster_labels.txt",
            _labels_text(fixtures.cluster.labels, fixtures.cluster.image.width),
        )
        _write_text(
            out_dir / "manifest.jsonl",
            "".join(json.dumps(entry, sort_keys=True) + "\n" for entry in manifest),
        )
    except OSError as exc:
        raise BenchIOError(f"cannot write fixtures to {out_dir}: {exc}") from exc

    logger.info("Wrote %d fixtures to %s", len(manifest), out_dir)
    return manifest
