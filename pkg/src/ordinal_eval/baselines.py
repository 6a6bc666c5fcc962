"""Reference metrics: accuracy, label-distance MSE and multiclass AUC."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np
from scipy.stats import rankdata

from .core import EvaluationSet, _check_label_pair
from .exceptions import DegenerateError, ShapeError


@dataclass(frozen=True)
class MetricSuite:
    """One model's scoreboard.

    ``index``, ``normalized_index`` and ``mse`` are lower-is-better;
    ``accuracy`` and ``auc`` are higher-is-better.
    """

    index: float
    normalized_index: float
    accuracy: float
    mse: float
    auc: float

    def as_dict(self) -> dict:
        return asdict(self)


def accuracy(predicted, actual) -> float:
    predicted, actual = _check_label_pair(predicted, actual)
    if predicted.size == 0:
        raise ShapeError("accuracy needs at least one observation")
    return float(np.mean(predicted == actual))


def mse(predicted, actual) -> float:
    """Mean squared distance between integer class labels."""
    predicted, actual = _check_label_pair(predicted, actual)
    if predicted.size == 0:
        raise ShapeError("mse needs at least one observation")
    diff = predicted.astype(float) - actual.astype(float)
    return float(np.mean(diff * diff))


def auc_binary(scores, positives) -> float:
    """Mann-Whitney estimate of P(score_pos > score_neg), ties count half.

    Uses midranks, so the result equals the fraction of concordant
    positive/negative pairs plus half the tied ones.
    """
    scores = np.asarray(scores, dtype=float)
    positives = np.asarray(positives, dtype=bool)
    if scores.ndim != 1 or scores.shape != positives.shape:
        raise ShapeError("scores and positives must be equal-length vectors")
    n_pos = int(positives.sum())
    n_neg = positives.size - n_pos
    if n_pos == 0 or n_neg == 0:
        raise DegenerateError("auc_binary needs at least one positive and one negative")
    ranks = rankdata(scores, method="average")
    u = ranks[positives].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


def auc_multiclass(eval_set: EvaluationSet) -> float:
    """Hand and Till's multiclass AUC.

    For every unordered class pair ``{i, j}``, ``A(i|j)`` ranks the class-i
    probability column over the observations of classes ``i`` and ``j``;
    the pair's separability is ``(A(i|j) + A(j|i)) / 2`` and the result is
    the mean over all ``M(M-1)/2`` pairs.  Every class must be present.
    """
    p = eval_set.probabilities
    y = eval_set.labels
    m = eval_set.n_classes
    present = np.bincount(y, minlength=m + 1)[1:]
    missing = np.flatnonzero(present == 0)
    if missing.size:
        raise DegenerateError(
            f"class {missing[0] + 1} has no observations; multiclass AUC needs "
            f"all {m} classes present",
        )
    total = 0.0
    for i, j in combinations(range(1, m + 1), 2):
        mask = (y == i) | (y == j)
        is_i = y[mask] == i
        a_ij = auc_binary(p[mask, i - 1], is_i)
        a_ji = auc_binary(p[mask, j - 1], ~is_i)
        total += 0.5 * (a_ij + a_ji)
    return total / (m * (m - 1) / 2)
