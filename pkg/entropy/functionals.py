"""
Shannon, Renyi and Tsallis entropy functionals (natural log, nats).

Zero-probability bins are skipped: 0 ln 0 = 0 and 0^a = 0.
"""

from __future__ import annotations

from typing import Callable, Dict

import numpy as np
from scipy import special

from config import ORDER_GUARD_BAND
from entropy.distributions import JointProbabilityTable, ProbabilityVector
from errors import InvalidOrderError
from models import EntropyFamily, EntropySpec


def _check_order(order: float, family: str, *, positive: bool) -> float:
    order = float(order)
    if not np.isfinite(order):
        raise InvalidOrderError(f"{family} order must be finite, got {order}")
    if positive and order <= 0:
        raise InvalidOrderError(f"{family} order must be > 0, got {order}")
    if abs(order - 1.0) <= ORDER_GUARD_BAND:
        raise InvalidOrderError(f"{family} order {order} is inside the guard band around 1")
    return order


def shannon_entropy(p: ProbabilityVector) -> float:
    return float(np.sum(special.entr(p.support())))


def renyi_entropy(p: ProbabilityVector, alpha: float) -> float:
    alpha = _check_order(alpha, "renyi", positive=True)
    power_sum = np.sum(p.support() ** alpha)
    return float(np.log(power_sum) / (1.0 - alpha))


def tsallis_entropy(p: ProbabilityVector, q: float) -> float:
    q = _check_order(q, "tsallis", positive=False)
    power_sum = np.sum(p.support() ** q)
    return float((1.0 - power_sum) / (q - 1.0))


_DISPATCH: Dict[EntropyFamily, Callable[[ProbabilityVector, EntropySpec], float]] = {
    EntropyFamily.SHANNON: lambda p, spec: shannon_entropy(p),
    EntropyFamily.RENYI: lambda p, spec: renyi_entropy(p, spec.order),
    EntropyFamily.TSALLIS: lambda p, spec: tsallis_entropy(p, spec.order),
}


def entropy(p: ProbabilityVector, spec: EntropySpec) -> float:
    return _DISPATCH[spec.family](p, spec)


def joint_entropy(j: JointProbabilityTable, spec: EntropySpec) -> float:
    return entropy(j.flattened(), spec)


def mutual_information(j: JointProbabilityTable, spec: EntropySpec) -> float:
    """H(rows) + H(cols) - H(joint) under one family for every term.

    For Renyi and Tsallis this additive form is a convention, not a
    divergence; it can be negative.
    """
    return (
        entropy(j.row_marginal(), spec)
        + entropy(j.col_marginal(), spec)
        - joint_entropy(j, spec)
    )
