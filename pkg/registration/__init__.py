"""Entrosense mutual-information registration."""

from registration.mutual_information import align_slave, mi_score
from registration.search import control_points, register, rmse_control_points
from registration.warp import warp, warp_with_mask

__all__ = [
    "align_slave",
    "control_points",
    "mi_score",
    "register",
    "rmse_control_points",
    "warp",
    "warp_with_mask",
]
