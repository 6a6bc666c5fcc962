"""Validated domain types shared by every other module.

Labels are 1-based ordinal ranks throughout (``1..M``), in files as well as
in memory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import RangeError, RowSumError, ShapeError

ROW_SUM_TOL = 1e-6


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """Probability matrix ``P`` (N x M) and true labels ``y`` in ``1..M``.

    Build instances through :func:`validate_evaluation_set`; the constructor
    itself does not check anything.
    """

    probabilities: np.ndarray
    labels: np.ndarray

    @property
    def n_observations(self) -> int:
        return self.probabilities.shape[0]

    @property
    def n_classes(self) -> int:
        return self.probabilities.shape[1]

    def __len__(self) -> int:
        return self.n_observations


def validate_evaluation_set(raw_probabilities, raw_labels) -> EvaluationSet:
    """Check and freeze a probability matrix with its true labels.

    Rows are never renormalised: a row whose sum is off by more than
    ``ROW_SUM_TOL`` is rejected, because rescaling would change the
    within-class orderings the ordinal index is built on.

    Raises
    ------
    ShapeError
        Non-2D matrix, no observations, fewer than two classes, or a label
        vector whose length differs from the number of rows.
    RangeError
        A probability outside ``[0, 1]`` (or not finite), or a label that is
        not an integer in ``1..M``.
    RowSumError
        A row that does not sum to one.
    """
    p = np.asarray(raw_probabilities, dtype=float)
    if p.ndim != 2:
        raise ShapeError(f"probabilities must be a 2-D matrix, got ndim={p.ndim}")
    n, m = p.shape
    if n == 0:
        raise ShapeError("at least one observation is required")
    if m < 2:
        raise ShapeError(f"at least two classes are required, got M={m}")

    y_raw = np.asarray(raw_labels)
    if y_raw.ndim != 1 or y_raw.shape[0] != n:
        raise ShapeError(
            f"labels must be a vector of length {n}, got shape {y_raw.shape}"
        )

    bad = ~np.isfinite(p) | (p < 0.0) | (p > 1.0)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise RangeError(
            f"observation {i + 1}: probability for class {j + 1} is {p[i, j]!r}, "
            "outside [0, 1]",
            row=int(i),
        )

    sums = p.sum(axis=1)
    off = np.abs(sums - 1.0) > ROW_SUM_TOL
    if off.any():
        i = int(np.flatnonzero(off)[0])
        raise RowSumError(
            f"observation {i + 1}: probabilities sum to {sums[i]:.9g}, expected 1",
            row=i,
        )

    y_float = y_raw.astype(float) if y_raw.dtype.kind in "biuf" else None
    if y_float is None:
        raise RangeError(f"labels must be integers, got dtype {y_raw.dtype}")
    bad_y = ~np.isfinite(y_float) | (y_float != np.round(y_float))
    bad_y |= (y_float < 1) | (y_float > m)
    if bad_y.any():
        i = int(np.flatnonzero(bad_y)[0])
        raise RangeError(
            f"observation {i + 1}: label {y_raw[i]} is not an integer in 1..{m}",
            row=i,
        )

    return EvaluationSet(_frozen(p), _frozen(y_float.astype(np.int64)))


def argmax_predict(eval_set: EvaluationSet) -> np.ndarray:
    """Hard predictions, 1-based; ties go to the lowest class index."""
    # np.argmax returns the first maximal column, which is the lowest class.
    return np.argmax(eval_set.probabilities, axis=1).astype(np.int64) + 1


def _check_label_pair(predicted, actual):
    predicted = np.asarray(predicted)
    actual = np.asarray(actual)
    if predicted.ndim != 1 or predicted.shape != actual.shape:
        raise ShapeError(
            f"predicted and actual must be equal-length vectors, got "
            f"{predicted.shape} and {actual.shape}"
        )
    return predicted, actual


def confusion_matrix(predicted, actual, n_classes: int) -> np.ndarray:
    """Counts with rows = predicted class and columns = actual class.

    Entry ``[r - 1, c - 1]`` is the number of observations predicted as
    ``r`` whose true class is ``c``.
    """
    predicted, actual = _check_label_pair(predicted, actual)
    for name, v in (("predicted", predicted), ("actual", actual)):
        if v.size and (v.min() < 1 or v.max() > n_classes):
            raise RangeError(f"{name} labels must lie in 1..{n_classes}")
    counts = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(counts, (predicted.astype(np.int64) - 1, actual.astype(np.int64) - 1), 1)
    return counts
