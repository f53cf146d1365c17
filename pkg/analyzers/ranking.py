"""
Ranking utilities for benchmark summaries.

Scores within ``RANKING_TIE_TOLERANCE`` of a group's best score tie with it.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Tuple, TypeVar

from config import RANKING_TIE_TOLERANCE, REFERENCE_RANKINGS

T = TypeVar("T")

RankGroups = Tuple[Tuple[str, ...], ...]


def assign_ranks(
    items: List[T],
    get_score: Callable[[T], float],
    set_rank: Callable[[T, int], None],
    tolerance: float = RANKING_TIE_TOLERANCE,
) -> None:
    """
    Apply competition ranks (1 = best, ties share a rank) by descending score.

    Items keep their relative input order inside a tie.
    """
    if not items:
        return

    ordered = sorted(items, key=lambda item: -float(get_score(item)))
    leader_score = None
    rank = 0
    for position, item in enumerate(ordered, start=1):
        score = float(get_score(item))
        if leader_score is None or leader_score - score > tolerance:
            rank = position
            leader_score = score
        set_rank(item, rank)


def rank_labels(scores: Mapping[str, float], tolerance: float = RANKING_TIE_TOLERANCE) -> RankGroups:
    """Tie groups best first; names are sorted inside a group."""
    groups: List[List[str]] = []
    leader_score = None
    for label in sorted(scores, key=lambda label: (-float(scores[label]), label)):
        score = float(scores[label])
        if leader_score is None or leader_score - score > tolerance:
            groups.append([])
            leader_score = score
        groups[-1].append(label)
    return tuple(tuple(group) for group in groups)


def format_groups(groups: RankGroups) -> str:
    return " > ".join(" = ".join(group) for group in groups)


@dataclass(frozen=True)
class RankingComparison:
    experiment: str
    metric: str
    observed: RankGroups
    reference: Tuple[str, ...]
    scores: Dict[str, float] = field(default_factory=dict)

    @property
    def agreement(self) -> str:
        """``agrees``, ``tied`` (reference only splits observed ties) or ``disagrees``."""
        position = {label: index for index, group in enumerate(self.observed) for label in group}
        flattened = tuple(label for group in self.observed for label in group)
        if set(flattened) != set(self.reference):
            return "disagrees"
        ranks = [position[label] for label in self.reference]
        if any(later < earlier for earlier, later in zip(ranks, ranks[1:])):
            return "disagrees"
        if all(len(group) == 1 for group in self.observed):
            return "agrees"
        return "tied"

    @property
    def agrees(self) -> bool:
        return self.agreement == "agrees"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "metric": self.metric,
            "observed": format_groups(self.observed),
            "reference": " > ".join(self.reference),
            "agreement": self.agreement,
        }


def compare_with_reference_ranking(
    experiment: str,
    family_scores: Mapping[str, float],
    metric: str,
) -> RankingComparison:
    """Observed family order vs the published order, restricted to the families run."""
    published = REFERENCE_RANKINGS.get(experiment, ())
    reference = tuple(family for family in published if family in family_scores)
    return RankingComparison(
        experiment=experiment,
        metric=metric,
        observed=rank_labels(family_scores),
        reference=reference,
        scores={family: float(score) for family, score in family_scores.items()},
    )
