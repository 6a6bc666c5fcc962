"""Evaluate several models on one test set and rank them per metric."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baselines import MetricSuite, accuracy, auc_multiclass, mse
from .core import EvaluationSet, argmax_predict
from .exceptions import DuplicateNameError, OrdinalEvalError
from .index import IndexReport, ordinal_index

#: metric name -> True when larger values are better
METRIC_ORIENTATION = {
    "index": False,
    "normalized_index": False,
    "auc": True,
    "accuracy": True,
    "mse": False,
}

# Values closer than this (relative) rank as ties; metric values built from
# the same rationals can differ in the last bit depending on summation order.
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class ModelEvaluation:
    model_name: str
    suite: MetricSuite
    report: IndexReport | None = None


@dataclass(frozen=True)
class RankingTable:
    model_names: tuple
    ranks: dict  # metric -> tuple of ints aligned with model_names
    higher_is_better: dict

    def rank_of(self, model_name: str, metric: str) -> int:
        return self.ranks[metric][self.model_names.index(model_name)]


def evaluate_model(name: str, eval_set: EvaluationSet) -> ModelEvaluation:
    if not name:
        raise OrdinalEvalError("model name must be non-empty")
    report = ordinal_index(eval_set)
    predicted = argmax_predict(eval_set)
    suite = MetricSuite(
        index=report.index_value,
        normalized_index=report.normalized_value,
        accuracy=accuracy(predicted, eval_set.labels),
        mse=mse(predicted, eval_set.labels),
        auc=auc_multiclass(eval_set),
    )
    return ModelEvaluation(name, suite, report)


def competition_ranks(values, higher_is_better: bool) -> tuple:
    """Min-rank ("1224") ranking; rank 1 is best."""
    v = np.asarray(values, dtype=float)
    if not higher_is_better:
        v = -v
    scale = np.maximum(np.abs(v[:, None]), np.abs(v[None, :]))
    better = (v[None, :] - v[:, None]) > TIE_RTOL * scale
    return tuple(int(r) for r in 1 + better.sum(axis=1))


def rank_models(evaluations) -> RankingTable:
    evaluations = list(evaluations)
    if not evaluations:
        raise OrdinalEvalError("at least one evaluation is required")
    names = [e.model_name for e in evaluations]
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateNameError(f"duplicate model name {name!r}")
        seen.add(name)
    ranks = {}
    for metric, higher in METRIC_ORIENTATION.items():
        col = [getattr(e.suite, metric) for e in evaluations]
        ranks[metric] = competition_ranks(col, higher)
    return RankingTable(tuple(names), ranks, dict(METRIC_ORIENTATION))
