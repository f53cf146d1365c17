"""
Entrosense Errors

Contract violations raised by the library and the failure types the
benchmark harness maps onto exit codes.
"""

from __future__ import annotations

from typing import Optional


class EntrosenseError(Exception):
    """Base class for every error raised by entrosense."""


# --- entropy-core ---
class InvalidOrderError(EntrosenseError, ValueError):
    """Renyi/Tsallis order outside its admissible range."""


class InvalidDistributionError(EntrosenseError, ValueError):
    """Weights that cannot be normalized into a probability distribution."""


class EmptySamplesError(EntrosenseError, ValueError):
    pass


class InvalidBandwidthError(EntrosenseError, ValueError):
    pass


# --- imaging ---
class MalformedHeaderError(EntrosenseError, ValueError):
    pass


class TruncatedPayloadError(EntrosenseError, ValueError):
    pass


class UnsupportedMaxvalError(EntrosenseError, ValueError):
    pass


class BadWindowError(EntrosenseError, ValueError):
    pass


class DimensionMismatchError(EntrosenseError, ValueError):
    pass


class ParameterRangeError(EntrosenseError, ValueError):
    pass


class ExcessiveShiftError(EntrosenseError, ValueError):
    pass


# --- thresholding ---
class DegenerateHistogramError(EntrosenseError, ValueError):
    """Histogram with fewer than two occupied gray levels."""


# --- registration ---
class EmptyOverlapError(EntrosenseError, ValueError):
    pass


class EmptyPointsError(EntrosenseError, ValueError):
    pass


# --- clustering ---
class SingletonClusterError(EntrosenseError, ValueError):
    """Cluster evaluation needs at least two clusters."""


# --- metrics ---
class LengthMismatchError(EntrosenseError, ValueError):
    pass


class NotBinaryError(EntrosenseError, ValueError):
    pass


class EmptyForegroundError(EntrosenseError, ValueError):
    pass


class NegativeTimeError(EntrosenseError, ValueError):
    pass


# --- harness ---
class ConfigError(EntrosenseError):
    """Invalid or unreadable experiment configuration."""


class BenchIOError(EntrosenseError):
    """Filesystem failure while writing fixtures or reports."""


class PipelineError(EntrosenseError):
    """A module error raised inside a named pipeline stage."""

    def __init__(self, stage: str, cause: Optional[BaseException] = None):
        self.stage = stage
        self.cause = cause
        detail = f": {cause}" if cause is not None else ""
        super().__init__(f"pipeline stage '{stage}' failed{detail}")
