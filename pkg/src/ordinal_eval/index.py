"""Error-interval weighted index for ordinal classifiers.

The observations of a test set are grouped by their argmax class (blocks
``1..M``, in class order) and, inside each block, sorted by the probability
of the predicted class in non-increasing order.  Laying the true labels of
that sequence over ``[0, 1)`` in steps of ``1/N`` gives the model step
function; the block-constant function equal to ``j`` on block ``j`` is the
exact one.

For every block the index integrates ``|f_model - f_exact|`` and weights the
result by the fraction of the block lying at or after the first
misclassified observation.  The weighted sum is bounded by
``K = sum_j l_j * max(M - j, j - 1)``, which yields the normalised index.

Conventions fixed here:

* the error interval includes the first misclassified slot, so its length is
  ``(n_j - i_j + 1) / N`` with ``i_j`` the 1-based sorted position;
* block lengths ``l_j`` are fractions of ``N``, keeping ``w_j`` in ``[0, 1]``;
* an empty block has ``w_j = 0`` and contributes nothing;
* probability ties inside a block keep the original observation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import EvaluationSet, _frozen, argmax_predict, validate_evaluation_set
from .exceptions import DegenerateError, DomainError, PreconditionError, ShapeError


@dataclass(frozen=True, eq=False)
class SortedClassification:
    """The evaluation ordering behind both step functions.

    Attributes
    ----------
    permutation : ndarray of int, shape (N,)
        1-based original observation numbers in evaluation order.
    boundaries : ndarray of int, shape (M + 1,)
        Cumulative block sizes ``(0, n_1, ..., n_M = N)``.
    sorted_actual : ndarray of int, shape (N,)
        True labels in evaluation order (the model step function).
    sorted_predicted : ndarray of int, shape (N,)
        Predicted labels in evaluation order (the exact step function).
    sorted_confidence : ndarray of float, shape (N,)
        Probability of the predicted class, in evaluation order.
    """

    permutation: np.ndarray
    boundaries: np.ndarray
    sorted_actual: np.ndarray
    sorted_predicted: np.ndarray
    sorted_confidence: np.ndarray

    @property
    def n_observations(self) -> int:
        return int(self.boundaries[-1])

    @property
    def n_classes(self) -> int:
        return len(self.boundaries) - 1

    @property
    def block_sizes(self) -> np.ndarray:
        return np.diff(self.boundaries)

    def block(self, j: int) -> slice:
        """0-based slice of sorted positions belonging to class ``j``."""
        return slice(int(self.boundaries[j - 1]), int(self.boundaries[j]))


@dataclass(frozen=True, eq=False)
class ErrorIntervalSet:
    """Per-class error intervals; all lengths are fractions of ``N``.

    ``first_error_position[j - 1]`` is the 1-based global sorted position of
    the first misclassified observation of block ``j``, or ``None``.
    """

    first_error_position: tuple
    error_lengths: np.ndarray
    class_lengths: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True, eq=False)
class IndexReport:
    class_integrals: np.ndarray
    weights: np.ndarray
    index_value: float
    max_value: float
    normalized_value: float
    class_lengths: np.ndarray

    def as_dict(self) -> dict:
        return {
            "index": self.index_value,
            "normalized_index": self.normalized_value,
            "k_max": self.max_value,
            "class_integrals": self.class_integrals.tolist(),
            "weights": self.weights.tolist(),
        }


def build_classification_function(eval_set: EvaluationSet) -> SortedClassification:
    """Group observations by argmax class and sort each group by confidence."""
    predicted = argmax_predict(eval_set)
    rows = np.arange(eval_set.n_observations)
    confidence = eval_set.probabilities[rows, predicted - 1]
    # lexsort: last key is primary.  Stable, so equal confidences keep the
    # original row order.
    order = np.lexsort((rows, -confidence, predicted))
    counts = np.bincount(predicted - 1, minlength=eval_set.n_classes)
    boundaries = np.concatenate(([0], np.cumsum(counts)))
    return SortedClassification(
        permutation=_frozen(order + 1),
        boundaries=_frozen(boundaries.astype(np.int64)),
        sorted_actual=_frozen(eval_set.labels[order]),
        sorted_predicted=_frozen(predicted[order]),
        sorted_confidence=_frozen(confidence[order]),
    )


def evaluate_step_function(
    sc: SortedClassification, which: Literal["model", "exact"], x: float
) -> int:
    """Value of the model or exact step function at ``x`` in ``[0, 1)``."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x!r}")
    if which == "model":
        values = sc.sorted_actual
    elif which == "exact":
        values = sc.sorted_predicted
    else:
        raise ValueError(f"which must be 'model' or 'exact', got {which!r}")
    pos = min(int(np.floor(x * sc.n_observations)), sc.n_observations - 1)
    return int(values[pos])


def error_intervals(sc: SortedClassification) -> ErrorIntervalSet:
    n = sc.n_observations
    m = sc.n_classes
    first = []
    err = np.zeros(m)
    for j in range(1, m + 1):
        blk = sc.block(j)
        wrong = np.flatnonzero(sc.sorted_actual[blk] != j)
        if wrong.size == 0:
            first.append(None)
            continue
        start = blk.start + int(wrong[0])
        first.append(start + 1)
        err[j - 1] = (blk.stop - start) / n
    lengths = sc.block_sizes / n
    weights = np.divide(err, lengths, out=np.zeros(m), where=lengths > 0)
    return ErrorIntervalSet(
        first_error_position=tuple(first),
        error_lengths=_frozen(err),
        class_lengths=_frozen(lengths),
        weights=_frozen(weights),
    )


def class_integrals(sc: SortedClassification) -> np.ndarray:
    """Integral of ``|f_model - f_exact|`` over each block."""
    dist = np.abs(sc.sorted_actual - sc.sorted_predicted)
    sums = np.array(
        [dist[sc.block(j)].sum() for j in range(1, sc.n_classes + 1)], dtype=float
    )
    return _frozen(sums / sc.n_observations)


def max_index(block_sizes, n_classes: int | None = None) -> float:
    """Largest index attainable for the given predicted-class block sizes.

    ``block_sizes`` are raw counts (or any non-negative masses); they are
    converted to fractions of their total.
    """
    sizes = np.asarray(block_sizes, dtype=float)
    m = len(sizes) if n_classes is None else n_classes
    if sizes.ndim != 1 or len(sizes) != m:
        raise ShapeError(f"expected {m} block sizes, got shape {sizes.shape}")
    total = sizes.sum()
    if total <= 0:
        raise DegenerateError("all predicted-class blocks are empty")
    cls = np.arange(1, m + 1)
    height = np.maximum(m - cls, cls - 1)
    # One division at the end: exact for integer counts whenever the true
    # value is representable (e.g. 17/10 -> 1.7).
    return float(np.dot(sizes, height) / total)


def _report(sc: SortedClassification) -> IndexReport:
    integrals = class_integrals(sc)
    intervals = error_intervals(sc)
    value = float(np.dot(intervals.weights, integrals))
    k = max_index(sc.block_sizes)
    return IndexReport(
        class_integrals=integrals,
        weights=intervals.weights,
        index_value=value,
        max_value=k,
        # I and K are summed in different orders; clip last-bit overshoot.
        normalized_value=min(value / k, 1.0),
        class_lengths=intervals.class_lengths,
    )


def ordinal_index(eval_set: EvaluationSet) -> IndexReport:
    """Compute the index, its maximum and the normalised index."""
    return _report(build_classification_function(eval_set))


def normalized_index(eval_set: EvaluationSet) -> float:
    return ordinal_index(eval_set).normalized_value


def degrade_one_observation(
    eval_set: EvaluationSet, observation: int, new_label: int
) -> EvaluationSet:
    """Turn a correctly classified observation into a misclassified one.

    Only the true label changes, so predictions, blocks and ``K`` stay as
    they were.  ``observation`` is 1-based.
    """
    n = eval_set.n_observations
    if not 1 <= observation <= n:
        raise PreconditionError(f"observation must be in 1..{n}, got {observation}")
    predicted = int(argmax_predict(eval_set)[observation - 1])
    if eval_set.labels[observation - 1] != predicted:
        raise PreconditionError(
            f"observation {observation} is already misclassified"
        )
    if new_label == predicted:
        raise PreconditionError(
            f"new label {new_label} equals the predicted class of observation "
            f"{observation}"
        )
    labels = eval_set.labels.copy()
    labels[observation - 1] = new_label
    return validate_evaluation_set(eval_set.probabilities, labels)


def ordinal_index_score(y_true, y_proba, normalize: bool = True) -> float:
    """Metric-function form: ``score(y_true, y_proba)``, lower is better.

    ``y_true`` holds labels in ``1..M`` and ``y_proba`` the ``(N, M)``
    probability matrix, with columns in class order.
    """
    report = ordinal_index(validate_evaluation_set(y_proba, y_true))
    return report.normalized_value if normalize else report.index_value
