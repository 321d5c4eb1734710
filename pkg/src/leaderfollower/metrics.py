"""Pair-misclassification error between a true and a predicted partition."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import PartitionError
from .partition import Partition


@dataclass(frozen=True)
class ScoreReport:
    pair_error: int
    num_pred_communities: int
    num_true_communities: int
    node_count: int

    def format(self) -> str:
        return (
            f"pair_error={self.pair_error} pred_k={self.num_pred_communities} "
            f"true_k={self.num_true_communities} n={self.node_count}"
        )


def _pairs(count: int) -> int:
    return count * (count - 1) // 2


def pair_error(truth: Partition, pred: Partition) -> int:
    """Number of unordered node pairs that are together in exactly one partition.

    With ``T`` and ``P`` the sets of co-clustered pairs, this is
    ``|T| + |P| - 2|T & P|``; ``|T & P|`` is the pair count of the
    contingency table cells, so no N x N matrix is needed.
    """
    if truth.node_count != pred.node_count:
        raise PartitionError(
            f"partitions cover different node sets ({truth.node_count} vs {pred.node_count} nodes)"
        )
    together_truth = sum(_pairs(c) for c in Counter(truth.community_of).values())
    together_pred = sum(_pairs(c) for c in Counter(pred.community_of).values())
    together_both = sum(
        _pairs(c) for c in Counter(zip(truth.community_of, pred.community_of)).values()
    )
    return together_truth + together_pred - 2 * together_both


def score(truth: Partition, pred: Partition) -> ScoreReport:
    return ScoreReport(
        pair_error=pair_error(truth, pred),
        num_pred_communities=pred.num_communities,
        num_true_communities=truth.num_communities,
        node_count=truth.node_count,
    )
