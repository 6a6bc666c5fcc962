import numpy as np
import pytest
from sklearn.base import clone
from sklearn.metrics import make_scorer
from sklearn.model_selection import cross_val_score
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from ordinal_eval.comparison import evaluate_model, rank_models
from ordinal_eval.core import validate_evaluation_set
from ordinal_eval.exceptions import (
    ConfigError,
    DegenerateClassError,
    EmptyTrainError,
    FoldError,
)
from ordinal_eval.index import ordinal_index_score
from ordinal_eval.simulation import (
    X1_PARAMS,
    X2_PARAMS,
    CvConfig,
    Dataset,
    GaussianClassConditionalClassifier,
    KNNClassifier,
    MajorityClassifier,
    SimulationConfig,
    gaussian_classconditional_classifier,
    generate_dataset,
    kfold_cv,
    knn_classifier,
    majority_baseline,
    stratified_folds,
)


@pytest.fixture(scope="module")
def small():
    return generate_dataset(SimulationConfig(n_observations=1500, seed=7))


def toy_dataset(features, labels, m):
    return Dataset(np.asarray(features, dtype=float), np.asarray(labels), m)


class TestGenerate:
    def test_shape_and_balance(self, small):
        assert small.features.shape == (1500, 3)
        assert np.bincount(small.labels)[1:].tolist() == [300] * 5
        assert np.isfinite(small.features).all()

    def test_deterministic(self):
        a = generate_dataset(SimulationConfig(200, seed=3))
        b = generate_dataset(SimulationConfig(200, seed=3))
        c = generate_dataset(SimulationConfig(200, seed=4))
        assert np.array_equal(a.features, b.features)
        assert not np.array_equal(a.features, c.features)

    def test_moments(self):
        d = generate_dataset(SimulationConfig(50000, seed=1))
        n = 10000
        for c in range(1, 6):
            x = d.features[d.labels == c]
            for col, params in ((0, X1_PARAMS), (1, X2_PARAMS)):
                mean, sd = params[c - 1]
                assert abs(x[:, col].mean() - mean) < 3 * sd / np.sqrt(n)
                # sd of the sample variance ~ sigma^2 * sqrt(2 / n)
                assert abs(x[:, col].var() - sd**2) < 3 * sd**2 * np.sqrt(2 / n)
            assert x[:, 2].min() >= 0.0 and x[:, 2].max() < 3.0
            assert abs(x[:, 2].mean() - 1.5) < 3 * np.sqrt(0.75 / n)

    @pytest.mark.parametrize("n", [17, 45, 0, -5])
    def test_bad_config(self, n):
        with pytest.raises(ConfigError):
            SimulationConfig(n_observations=n, seed=1)

    def test_csv_round_trip(self, small, tmp_path):
        path = tmp_path / "data.csv"
        small.to_csv(path)
        back = Dataset.from_csv(path)
        assert np.array_equal(back.features, small.features)
        assert np.array_equal(back.labels, small.labels)


class TestKNN:
    def test_query_on_training_point(self):
        train = toy_dataset([[0, 0], [5, 5], [10, 0]], [1, 2, 3], 3)
        proba = knn_classifier(train, 1, [[5, 5]])
        assert proba.tolist() == [[0.0, 1.0, 0.0]]

    def test_near_first_cluster(self):
        train = toy_dataset(
            [[0, 0], [0.1, 0], [0, 0.1], [10, 10], [10.1, 10], [10, 10.1]], [1, 1, 1, 2, 2, 2], 4
        )
        assert knn_classifier(train, 3, [[0.05, 0.05]]).tolist() == [[1.0, 0.0, 0.0, 0.0]]

    def test_output_is_valid(self, small):
        proba = knn_classifier(small, 5, small.features[:100])
        validate_evaluation_set(proba, small.labels[:100])
        assert np.allclose(proba.sum(axis=1), 1.0, atol=1e-9)

    def test_errors(self):
        with pytest.raises(EmptyTrainError):
            KNNClassifier().fit(np.zeros((0, 2)), np.zeros(0, dtype=int))
        with pytest.raises(ConfigError):
            KNNClassifier(n_neighbors=4).fit([[0.0], [1.0]], [1, 2])


class TestGaussian:
    def test_symmetric_midpoint(self):
        train = toy_dataset([[-2.0], [-1.0], [1.0], [2.0]], [1, 1, 2, 2], 2)
        proba = gaussian_classconditional_classifier(train, [[0.0]])
        np.testing.assert_allclose(proba, [[0.5, 0.5]], atol=1e-9)

    def test_query_at_class_mean(self):
        train = toy_dataset(
            [[0, 0], [1, 1], [20, 20], [21, 21], [40, 0], [41, 1]], [1, 1, 2, 2, 3, 3], 3
        )
        proba = gaussian_classconditional_classifier(train, [[20.5, 20.5]])
        assert proba.argmax() == 1
        assert proba[0, 1] > 0.99

    def test_rows_sum_to_one(self, small):
        rng = np.random.default_rng(0)
        proba = gaussian_classconditional_classifier(small, rng.normal(4, 4, size=(200, 3)))
        np.testing.assert_allclose(proba.sum(axis=1), 1.0, atol=1e-9)
        assert ((proba >= 0) & (proba <= 1)).all()

    def test_zero_variance_floor(self):
        train = toy_dataset([[1.0], [1.0], [3.0], [3.0]], [1, 1, 2, 2], 2)
        proba = gaussian_classconditional_classifier(train, [[1.0], [2.0]])
        assert np.isfinite(proba).all()
        assert proba[0].tolist() == [1.0, 0.0]

    def test_needs_two_points_per_class(self):
        with pytest.raises(DegenerateClassError):
            GaussianClassConditionalClassifier(n_classes=2).fit([[0.0], [1.0], [2.0]], [1, 1, 2])


class TestMajority:
    def test_uniform(self, small):
        proba = majority_baseline(small, small.features[:4])
        np.testing.assert_allclose(proba, np.full((4, 5), 0.2))
        assert MajorityClassifier(n_classes=5).fit(small.features, small.labels).predict(
            small.features[:3]
        ).tolist() == [1, 1, 1]

    def test_single_class(self):
        train = toy_dataset([[0.0], [1.0]], [3, 3], 5)
        assert majority_baseline(train, [[5.0]]).tolist() == [[0, 0, 1, 0, 0]]

    def test_accuracy_is_one_over_m(self, small):
        es = kfold_cv(small, MajorityClassifier(), CvConfig(10, 0))
        assert evaluate_model("maj", es).suite.accuracy == pytest.approx(1 / 5)


class TestFolds:
    def test_balanced_disjoint_cover(self, small):
        folds = stratified_folds(small.labels, 10, seed=2)
        sizes = np.bincount(folds)
        assert sizes.max() - sizes.min() <= 1
        assert sizes.sum() == len(small)
        for f in range(10):
            assert np.bincount(small.labels[folds == f])[1:].tolist() == [30] * 5

    def test_uneven_sizes(self):
        labels = np.array([1] * 7 + [2] * 6)
        sizes = np.bincount(stratified_folds(labels, 4, seed=0))
        assert sizes.max() - sizes.min() <= 1

    def test_deterministic(self, small):
        a = kfold_cv(small, KNNClassifier(), CvConfig(5, 9))
        b = kfold_cv(small, KNNClassifier(), CvConfig(5, 9))
        assert np.array_equal(a.probabilities, b.probabilities)

    def test_leave_one_out_never_sees_row(self):
        d = toy_dataset([[0.0], [0.0], [0.0], [10.0], [10.0], [10.0]], [1, 1, 2, 2, 2, 1], 2)
        es = kfold_cv(d, KNNClassifier(n_neighbors=1), CvConfig(folds=6, seed=0))
        # with k=1 and the row itself held out, the nearest neighbour is
        # the first remaining identical point in training order
        assert es.probabilities.argmax(axis=1).tolist() == [0, 0, 0, 1, 1, 1]

    def test_fold_error(self):
        d = toy_dataset([[0.0], [1.0], [2.0], [3.0]], [1, 1, 1, 2], 2)
        with pytest.raises(FoldError):
            kfold_cv(d, MajorityClassifier(), CvConfig(folds=2, seed=0))

    def test_bad_fold_count(self, small):
        with pytest.raises(ConfigError):
            stratified_folds(small.labels, 1, 0)


class TestEstimatorAPI:
    def test_params_and_clone(self):
        est = KNNClassifier(n_neighbors=7)
        assert est.get_params() == {"n_neighbors": 7, "n_classes": None}
        assert clone(est).set_params(n_neighbors=3).n_neighbors == 3

    def test_pipeline_and_scorer(self, small):
        scorer = make_scorer(
            ordinal_index_score, response_method="predict_proba", greater_is_better=False
        )
        model = make_pipeline(StandardScaler(), GaussianClassConditionalClassifier(n_classes=5))
        scores = cross_val_score(model, small.features, small.labels, cv=5, scoring=scorer)
        assert scores.shape == (5,)
        assert ((scores <= 0) & (scores >= -1)).all()

    def test_unfitted(self):
        from sklearn.exceptions import NotFittedError

        with pytest.raises(NotFittedError):
            KNNClassifier().predict_proba([[0.0, 1.0]])


class TestRanking:
    def test_knn_beats_majority_everywhere(self, small):
        cv = CvConfig(10, 7)
        evs = [
            evaluate_model("knn", kfold_cv(small, KNNClassifier(), cv)),
            evaluate_model("majority", kfold_cv(small, MajorityClassifier(), cv)),
        ]
        table = rank_models(evs)
        for metric, ranks in table.ranks.items():
            assert ranks == (1, 2), metric

    def test_regression_values(self, small):
        # Recorded from this implementation (N=1500, seed 7, 10 folds, k=5).
        es = kfold_cv(small, KNNClassifier(), CvConfig(10, 7))
        s = evaluate_model("knn", es).suite
        assert s.index == pytest.approx(0.5085148514851485, rel=1e-9)
        assert s.normalized_index == pytest.approx(0.15934244354036406, rel=1e-9)
        assert s.accuracy == pytest.approx(0.56)
        assert s.mse == pytest.approx(0.7313333333333333, rel=1e-9)
        assert s.auc == pytest.approx(0.8209636111111112, rel=1e-9)
