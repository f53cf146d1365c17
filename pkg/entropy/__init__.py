"""Entrosense entropy functionals and estimators."""

from entropy.distributions import JointProbabilityTable, ProbabilityVector
from entropy.functionals import (
    entropy,
    joint_entropy,
    mutual_information,
    renyi_entropy,
    shannon_entropy,
    tsallis_entropy,
)
from entropy.kernel import (
    cross_information_potential,
    gaussian_kernel_matrix,
    information_potential,
    renyi_quadratic_entropy,
)

__all__ = [
    "JointProbabilityTable",
    "ProbabilityVector",
    "cross_information_potential",
    "entropy",
    "gaussian_kernel_matrix",
    "information_potential",
    "joint_entropy",
    "mutual_information",
    "renyi_entropy",
    "renyi_quadratic_entropy",
    "shannon_entropy",
    "tsallis_entropy",
]
