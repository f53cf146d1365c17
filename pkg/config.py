"""
Entrosense Configuration and Constants

Numerical tolerances, pipeline defaults and harness limits.
"""

from typing import Dict, Final, FrozenSet, Tuple

# --- NUMERICS ---
# per-bin absolute tolerance when comparing distributions
PROBABILITY_TOLERANCE: Final[float] = 1e-9
# |order - 1| must exceed this for Renyi and Tsallis
ORDER_GUARD_BAND: Final[float] = 1e-6
GRAY_LEVELS: Final[int] = 256
MAX_GRAY: Final[int] = 255

# --- ENTROPY DEFAULTS ---
DEFAULT_RENYI_ALPHA: Final[float] = 2.0
DEFAULT_TSALLIS_Q: Final[float] = 2.0

# --- THRESHOLDING ---
DEFAULT_LOCAL_WINDOW: Final[int] = 3

# --- REGISTRATION ---
ALLOWED_MI_BINS: Final[FrozenSet[int]] = frozenset({16, 32, 64, 128, 256})
DEFAULT_MI_BINS: Final[int] = 64
MIN_OVERLAP_PIXELS: Final[int] = 64
DEFAULT_SEARCH_WINDOW: Final[int] = 16
REFINEMENT_STEPS: Final[Tuple[float, ...]] = (0.5, 0.25)
MAX_REFINEMENT_MOVES: Final[int] = 200

# --- CLUSTERING ---
DEFAULT_MAX_SWEEPS: Final[int] = 50
DEFAULT_CEF_HISTOGRAM_BINS: Final[int] = 32
# sigma = factor * feature-space diameter when no bandwidth is given
DEFAULT_BANDWIDTH_FACTOR: Final[float] = 0.1

# --- TIME CATEGORIES (seconds) ---
LOW_TIME_LIMIT: Final[float] = 30.0
HIGH_TIME_LIMIT: Final[float] = 60.0

# --- HARNESS ---
EXIT_OK: Final[int] = 0
EXIT_CONFIG_ERROR: Final[int] = 2
EXIT_PIPELINE_ERROR: Final[int] = 3
EXIT_IO_ERROR: Final[int] = 4
MAX_BENCH_JOBS: Final[int] = 32
MAX_FIXTURE_SIZE: Final[int] = 1024
MAX_CLUSTER_POINTS: Final[int] = 4096

# primary-metric scores this close rank as ties
RANKING_TIE_TOLERANCE: Final[float] = 1e-9

# Reference orderings reported by the comparative study, best first.
REFERENCE_RANKINGS: Final[Dict[str, Tuple[str, ...]]] = {
    "register": ("renyi", "tsallis", "shannon"),
    "cluster": ("tsallis", "renyi", "shannon"),
    "threshold": ("tsallis", "renyi", "shannon"),
}
