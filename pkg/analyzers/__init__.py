"""Entrosense accuracy metrics and ranking helpers."""

from analyzers.accuracy import (
    ConfusionMatrix,
    best_agreement_mapping,
    binary_confusion,
    confusion,
    kappa,
    misclassification_error,
    overall_accuracy,
)
from analyzers.correlation import average_score, nccc, threshold_correlation
from analyzers.ranking import (
    RankingComparison,
    assign_ranks,
    compare_with_reference_ranking,
    rank_labels,
)
from analyzers.timing import categorize_time

__all__ = [
    "ConfusionMatrix",
    "RankingComparison",
    "assign_ranks",
    "average_score",
    "best_agreement_mapping",
    "binary_confusion",
    "categorize_time",
    "compare_with_reference_ranking",
    "confusion",
    "kappa",
    "misclassification_error",
    "nccc",
    "overall_accuracy",
    "rank_labels",
    "threshold_correlation",
]
