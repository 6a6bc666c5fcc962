"""Synthetic five-class ordinal data, reference classifiers and k-fold CV.

Random streams
--------------
All randomness comes from NumPy's PCG64 bit generator seeded through
``SeedSequence(seed)``.  Data generation spawns one child stream per class
(in class order); fold assignment uses a separate child spawned from
``SeedSequence([seed, 1])``.  Normal deviates are produced with the
Box-Muller transform from the stream's uniforms, so the output depends only
on PCG64 and ``libm``, not on NumPy's normal-sampling algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, clone
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .core import EvaluationSet, _frozen, validate_evaluation_set
from .io import atomic_write
from .exceptions import (
    ConfigError,
    DegenerateClassError,
    EmptyTrainError,
    FoldError,
)

N_CLASSES = 5

#: (mean, sd) of x1 and x2 for classes 1..5; x3 ~ Uniform(0, 3) for every class
X1_PARAMS = ((2.0, 1.5), (3.0, 1.0), (4.0, 1.5), (5.0, 1.0), (6.0, 1.0))
X2_PARAMS = ((1.0, 2.5), (5.0, 2.0), (7.0, 2.5), (8.5, 2.0), (9.5, 2.0))
X3_RANGE = (0.0, 3.0)

VARIANCE_FLOOR = 1e-6


@dataclass(frozen=True)
class SimulationConfig:
    n_observations: int = 7500
    seed: int = 0

    def __post_init__(self):
        n = self.n_observations
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise ConfigError(f"n_observations must be an integer, got {n!r}")
        if n < 50 or n % N_CLASSES:
            raise ConfigError(
                f"n_observations must be >= 50 and divisible by {N_CLASSES}, got {n}"
            )
        if not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed!r}")


@dataclass(frozen=True)
class CvConfig:
    folds: int = 10
    seed: int = 0


@dataclass(frozen=True, eq=False)
class Dataset:
    features: np.ndarray
    labels: np.ndarray
    n_classes: int = N_CLASSES

    def __len__(self):
        return self.features.shape[0]

    def subset(self, idx) -> "Dataset":
        return Dataset(_frozen(self.features[idx]), _frozen(self.labels[idx]), self.n_classes)

    def to_csv(self, path):
        lines = [",".join(f"x{i + 1}" for i in range(self.features.shape[1])) + ",label"]
        for row, label in zip(self.features, self.labels):
            lines.append(",".join(repr(float(v)) for v in row) + f",{int(label)}")
        atomic_write(path, "\n".join(lines) + "\n")

    @classmethod
    def from_csv(cls, path, n_classes: int = N_CLASSES) -> "Dataset":
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(_frozen(data[:, :-1]), _frozen(data[:, -1].astype(np.int64)), n_classes)


def _box_muller(u1, u2):
    # 1 - u1 lies in (0, 1], keeping the log finite.
    r = np.sqrt(-2.0 * np.log1p(-u1))
    return r * np.cos(2.0 * np.pi * u2), r * np.sin(2.0 * np.pi * u2)


def generate_dataset(config: SimulationConfig) -> Dataset:
    """Draw ``N / 5`` observations per class, rows ordered by class."""
    per_class = config.n_observations // N_CLASSES
    streams = np.random.SeedSequence(config.seed).spawn(N_CLASSES)
    feats, labels = [], []
    lo, hi = X3_RANGE
    for c, ss in enumerate(streams):
        u = np.random.Generator(np.random.PCG64(ss)).random((per_class, 3))
        z1, z2 = _box_muller(u[:, 0], u[:, 1])
        (m1, s1), (m2, s2) = X1_PARAMS[c], X2_PARAMS[c]
        feats.append(np.column_stack([m1 + s1 * z1, m2 + s2 * z2, lo + (hi - lo) * u[:, 2]]))
        labels.append(np.full(per_class, c + 1, dtype=np.int64))
    return Dataset(_frozen(np.vstack(feats)), _frozen(np.concatenate(labels)))


# -- estimators ---------------------------------------------------------------


class _OrdinalClassifier(ClassifierMixin, BaseEstimator):
    """Shared plumbing: labels are ``1..n_classes`` and ``predict_proba``
    always returns one column per class, even for classes unseen in ``fit``."""

    def _validate_fit(self, X, y):
        if np.asarray(X).shape[0] == 0:
            raise EmptyTrainError("training set is empty")
        X, y = check_X_y(X, y)
        y = y.astype(np.int64)
        m = self.n_classes if self.n_classes is not None else int(y.max())
        if y.min() < 1 or y.max() > m:
            raise ConfigError(f"labels must lie in 1..{m}")
        self.classes_ = np.arange(1, m + 1)
        self.n_features_in_ = X.shape[1]
        return X, y

    def _validate_query(self, X):
        check_is_fitted(self)
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ConfigError(
                f"expected {self.n_features_in_} features, got {X.shape[1]}"
            )
        return X

    def predict(self, X):
        proba = self.predict_proba(X)
        return self.classes_[np.argmax(proba, axis=1)]


class KNNClassifier(_OrdinalClassifier):
    """k-nearest neighbours with class vote fractions as probabilities.

    Features are standardised with the training mean and standard deviation;
    distances are Euclidean.  Equidistant neighbours are taken in training
    order.
    """

    def __init__(self, n_neighbors=5, n_classes=None):
        self.n_neighbors = n_neighbors
        self.n_classes = n_classes

    def fit(self, X, y):
        X, y = self._validate_fit(X, y)
        if not 1 <= self.n_neighbors <= X.shape[0]:
            raise ConfigError(
                f"n_neighbors must be in 1..{X.shape[0]}, got {self.n_neighbors}"
            )
        self.mean_ = X.mean(axis=0)
        sd = X.std(axis=0)
        self.scale_ = np.where(sd > 0, sd, 1.0)
        self._train_X = (X - self.mean_) / self.scale_
        self._train_y = y
        return self

    def predict_proba(self, X):
        X = (self._validate_query(X) - self.mean_) / self.scale_
        k = self.n_neighbors
        d2 = ((X[:, None, :] - self._train_X[None, :, :]) ** 2).sum(axis=2)
        nearest = np.argsort(d2, axis=1, kind="stable")[:, :k]
        votes = self._train_y[nearest] - 1
        proba = np.zeros((X.shape[0], len(self.classes_)))
        np.add.at(proba, (np.repeat(np.arange(X.shape[0]), k), votes.ravel()), 1.0)
        return proba / k


class GaussianClassConditionalClassifier(_OrdinalClassifier):
    """Class priors times independent per-feature normal likelihoods."""

    def __init__(self, var_floor=VARIANCE_FLOOR, n_classes=None):
        self.var_floor = var_floor
        self.n_classes = n_classes

    def fit(self, X, y):
        X, y = self._validate_fit(X, y)
        m = len(self.classes_)
        counts = np.bincount(y - 1, minlength=m)
        if (counts < 2).any():
            c = int(np.flatnonzero(counts < 2)[0]) + 1
            raise DegenerateClassError(
                f"class {c} has {counts[c - 1]} training points; at least 2 required"
            )
        self.means_ = np.array([X[y == c].mean(axis=0) for c in self.classes_])
        var = np.array([X[y == c].var(axis=0) for c in self.classes_])
        self.vars_ = np.maximum(var, self.var_floor)
        self.log_prior_ = np.log(counts / counts.sum())
        return self

    def predict_proba(self, X):
        X = self._validate_query(X)
        diff = X[:, None, :] - self.means_[None, :, :]
        loglik = -0.5 * (np.log(2.0 * np.pi * self.vars_)[None] + diff**2 / self.vars_[None])
        joint = loglik.sum(axis=2) + self.log_prior_[None, :]
        joint -= joint.max(axis=1, keepdims=True)
        proba = np.exp(joint)
        return proba / proba.sum(axis=1, keepdims=True)


class MajorityClassifier(_OrdinalClassifier):
    """Predicts the training class frequencies for every query."""

    def __init__(self, n_classes=None):
        self.n_classes = n_classes

    def fit(self, X, y):
        X, y = self._validate_fit(X, y)
        counts = np.bincount(y - 1, minlength=len(self.classes_))
        self.class_prior_ = counts / counts.sum()
        return self

    def predict_proba(self, X):
        X = self._validate_query(X)
        return np.tile(self.class_prior_, (X.shape[0], 1))


MODELS = {
    "knn": KNNClassifier,
    "gauss": GaussianClassConditionalClassifier,
    "majority": MajorityClassifier,
}


def knn_classifier(train: Dataset, k_neighbors: int, query) -> np.ndarray:
    model = KNNClassifier(n_neighbors=k_neighbors, n_classes=train.n_classes)
    return model.fit(train.features, train.labels).predict_proba(query)


def gaussian_classconditional_classifier(train: Dataset, query) -> np.ndarray:
    model = GaussianClassConditionalClassifier(n_classes=train.n_classes)
    return model.fit(train.features, train.labels).predict_proba(query)


def majority_baseline(train: Dataset, query) -> np.ndarray:
    model = MajorityClassifier(n_classes=train.n_classes)
    return model.fit(train.features, train.labels).predict_proba(query)


# -- cross-validation ---------------------------------------------------------


def stratified_folds(labels, n_folds: int, seed: int) -> np.ndarray:
    """0-based fold id per observation.

    Each class is shuffled, the classes are concatenated in class order and
    positions are dealt round-robin, so fold sizes differ by at most one and
    every fold gets its share of each class.
    """
    labels = np.asarray(labels)
    n = labels.shape[0]
    if not 2 <= n_folds <= n:
        raise ConfigError(f"folds must be in 2..{n}, got {n_folds}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 1])))
    order = np.concatenate(
        [rng.permutation(np.flatnonzero(labels == c)) for c in np.unique(labels)]
    )
    fold = np.empty(n, dtype=np.int64)
    fold[order] = np.arange(n) % n_folds
    return fold


def kfold_cv(dataset: Dataset, model, cv: CvConfig = CvConfig()) -> EvaluationSet:
    """Out-of-fold probability matrix for ``model`` (an unfitted estimator)."""
    folds = stratified_folds(dataset.labels, cv.folds, cv.seed)
    m = dataset.n_classes
    proba = np.empty((len(dataset), m))
    for f in range(cv.folds):
        test = folds == f
        train_y = dataset.labels[~test]
        absent = np.setdiff1d(np.arange(1, m + 1), train_y)
        if absent.size:
            raise FoldError(
                f"training data for fold {f + 1} has no observations of class {absent[0]}"
            )
        est = clone(model)
        if "n_classes" in est.get_params() and est.get_params()["n_classes"] is None:
            est.set_params(n_classes=m)
        est.fit(dataset.features[~test], train_y)
        proba[test] = est.predict_proba(dataset.features[test])
    return validate_evaluation_set(proba, dataset.labels)
