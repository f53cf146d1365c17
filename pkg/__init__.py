"""
Entrosense: generalized-entropy image analysis

Shannon, Renyi and Tsallis entropies applied to maximum-entropy thresholding,
mutual-information registration and information-theoretic clustering, with a
benchmark harness that compares the three families.
"""

from app_meta import __version__

from models import EntropyFamily, EntropySpec, TransformParams

__all__ = [
    "__version__",
    "EntropyFamily",
    "EntropySpec",
    "TransformParams",
]
