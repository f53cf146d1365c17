"""
Pydantic models for benchmark configuration.
"""

from __future__ import annotations

import math
from typing import Annotated, Any, Dict, List, Literal, Mapping, Optional, Tuple

import annotated_types
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from config import ALLOWED_MI_BINS, MAX_BENCH_JOBS, MAX_FIXTURE_SIZE, MAX_GRAY
from errors import ConfigError, InvalidOrderError
from models import EntropyFamily, EntropySpec

EXPERIMENTS: Tuple[str, ...] = ("threshold", "register", "cluster")

GrayLevel = Annotated[float, annotated_types.Interval(ge=0, le=MAX_GRAY)]
PositiveFloat = Annotated[float, annotated_types.Gt(0)]

LIST_FIELDS = frozenset(
    {"families", "mi_bins", "rotations", "cluster_means", "sigma_sweep", "order_sweep"}
)


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: Literal["threshold", "register", "cluster", "all"] = "all"
    families: List[str] = Field(
        default_factory=lambda: ["shannon", "renyi:2", "tsallis:2"], min_length=1
    )
    order_sweep: List[float] = Field(default_factory=list)
    seed: int = Field(default=7, ge=0)
    jobs: int = Field(default=1, ge=1, le=MAX_BENCH_JOBS)
    out: str = Field(default="bench_out", min_length=1)
    format: Literal["csv", "markdown"] = "csv"
    timings: bool = False

    # thresholding fixture
    threshold_size: int = Field(default=64, ge=8, le=MAX_FIXTURE_SIZE)
    background_mean: GrayLevel = 60.0
    foreground_mean: GrayLevel = 170.0
    region_sigma: PositiveFloat = 18.0
    foreground_split: float = Field(default=0.5, gt=0, lt=1)
    salt_pepper: float = Field(default=0.0, ge=0, le=1)
    threshold_mode: Literal["1d", "2d"] = "1d"
    local_window: int = Field(default=3, ge=3)

    # registration fixture
    register_size: int = Field(default=128, ge=16, le=MAX_FIXTURE_SIZE)
    texture_smoothness: PositiveFloat = 2.0
    shift_dx: int = 5
    shift_dy: int = -3
    noise_sigma: float = Field(default=2.0, ge=0)
    degrade_factor: int = Field(default=1, ge=1)
    search_window: int = Field(default=16, ge=0)
    rotations: List[float] = Field(default_factory=lambda: [0.0], min_length=1)
    mi_bins: List[int] = Field(default_factory=lambda: [64], min_length=1)

    # clustering fixture
    cluster_size: int = Field(default=32, ge=4, le=64)
    cluster_means: List[GrayLevel] = Field(default_factory=lambda: [40.0, 128.0, 215.0], min_length=2)
    cluster_sigma: PositiveFloat = 10.0
    cluster_with_coords: bool = False
    sigma_sweep: List[PositiveFloat] = Field(default_factory=list)
    max_sweeps: int = Field(default=50, ge=1)

    @field_validator(*sorted(LIST_FIELDS), mode="before")
    @classmethod
    def split_comma_lists(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("families")
    @classmethod
    def normalize_families(cls, value: List[str]) -> List[str]:
        labels: List[str] = []
        for text in value:
            try:
                label = EntropySpec.parse(text).label
            except InvalidOrderError as exc:
                raise ValueError(str(exc)) from exc
            if label not in labels:
                labels.append(label)
        return labels

    @field_validator("mi_bins")
    @classmethod
    def check_bins(cls, value: List[int]) -> List[int]:
        for bins in value:
            if bins not in ALLOWED_MI_BINS:
                raise ValueError(f"bins must be one of {sorted(ALLOWED_MI_BINS)}, got {bins}")
        return value

    @model_validator(mode="after")
    def check_fixture_parameters(self) -> "ExperimentConfig":
        if self.background_mean >= self.foreground_mean:
            raise ValueError("background_mean must be below foreground_mean")
        if self.register_size % self.degrade_factor:
            raise ValueError("register_size must be a multiple of degrade_factor")
        if abs(self.shift_dx) >= self.register_size or abs(self.shift_dy) >= self.register_size:
            raise ValueError("planted shift must be smaller than register_size")
        if len(self.cluster_means) > self.cluster_size:
            raise ValueError("cluster_size is too small for the number of cluster_means")
        if any(not -math.pi < theta <= math.pi for theta in self.rotations):
            raise ValueError("rotations must lie in (-pi, pi]")
        if self.local_window % 2 == 0:
            raise ValueError("local_window must be odd")
        if self.local_window > self.threshold_size:
            raise ValueError("local_window must not exceed threshold_size")
        for order in self.order_sweep:
            for family in (EntropyFamily.RENYI, EntropyFamily.TSALLIS):
                try:
                    EntropySpec(family, order)
                except InvalidOrderError as exc:
                    raise ValueError(str(exc)) from exc
        return self

    @property
    def experiments(self) -> Tuple[str, ...]:
        return EXPERIMENTS if self.experiment == "all" else (self.experiment,)

    def specs(self) -> List[EntropySpec]:
        """Requested families, each Renyi/Tsallis family expanded over ``order_sweep``."""
        expanded: List[EntropySpec] = []
        for label in self.families:
            spec = EntropySpec.parse(label)
            variants = (
                [spec.with_order(order) for order in self.order_sweep]
                if self.order_sweep and spec.family is not EntropyFamily.SHANNON
                else [spec]
            )
            for variant in variants:
                if variant not in expanded:
                    expanded.append(variant)
        return expanded


def build_experiment_config(
    file_values: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> ExperimentConfig:
    """Merge config-file values with CLI overrides (overrides win) and validate."""
    merged: Dict[str, Any] = dict(file_values or {})
    merged.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        return ExperimentConfig(**merged)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
            for error in exc.errors()
        )
        raise ConfigError(f"invalid experiment config: {problems}") from exc
