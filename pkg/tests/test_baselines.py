import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordinal_eval.baselines import accuracy, auc_binary, auc_multiclass, mse
from ordinal_eval.core import EvaluationSet, argmax_predict, validate_evaluation_set
from ordinal_eval.exceptions import DegenerateError, ShapeError

from oracles import pairwise_auc_oracle

TOY1_ACTUAL = [1] * 5 + [2] * 7 + [3] * 8
TOY1_PRED_M1 = [1] * 5 + [2] * 7 + [3] * 7 + [1]
TOY1_PRED_M2 = [1] * 5 + [2] * 6 + [1] + [3] * 8


class TestAccuracy:
    def test_toy1(self):
        assert accuracy(TOY1_PRED_M1, TOY1_ACTUAL) == 0.95

    def test_perfect(self):
        assert accuracy([1, 2, 3], [1, 2, 3]) == 1.0

    def test_worked_example(self, worked):
        assert accuracy(argmax_predict(worked), worked.labels) == 0.6

    def test_shape(self):
        with pytest.raises(ShapeError):
            accuracy([1, 2], [1])
        with pytest.raises(ShapeError):
            accuracy([], [])


class TestMSE:
    def test_toy1(self):
        assert mse(TOY1_PRED_M1, TOY1_ACTUAL) == 0.2
        assert mse(TOY1_PRED_M2, TOY1_ACTUAL) == 0.05

    def test_perfect(self):
        assert mse([2, 2, 1], [2, 2, 1]) == 0.0

    def test_shape(self):
        with pytest.raises(ShapeError):
            mse([1], [1, 2])

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=30))
    def test_zero_iff_all_correct(self, pairs):
        pred, act = map(list, zip(*pairs))
        assert (mse(pred, act) == 0.0) == (accuracy(pred, act) == 1.0)
        errors = sum(p != a for p, a in pairs) / len(pairs)
        assert accuracy(pred, act) + errors == pytest.approx(1.0, abs=1e-15)
        assert 0.0 <= mse(pred, act) <= 16.0


class TestAucBinary:
    def test_separated(self):
        assert auc_binary([0.1, 0.2, 0.8, 0.9], [False, False, True, True]) == 1.0

    def test_identical_scores(self):
        assert auc_binary([0.3] * 5, [True, False, True, False, False]) == 0.5

    def test_small_brute_force(self):
        assert auc_binary([0.9, 0.4, 0.6], [True, False, False]) == 1.0

    def test_ties_half_credit(self):
        # pairs: (0.5 vs 0.5) tie, (0.5 vs 0.2) win -> 1.5 / 2
        assert auc_binary([0.5, 0.5, 0.2], [True, False, False]) == 0.75

    def test_degenerate(self):
        with pytest.raises(DegenerateError):
            auc_binary([0.1, 0.2], [True, True])

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.tuples(st.integers(0, 6), st.booleans()), min_size=2, max_size=30).filter(
            lambda xs: 0 < sum(b for _, b in xs) < len(xs)
        )
    )
    def test_complement(self, pairs):
        scores = np.array([s for s, _ in pairs], dtype=float)
        pos = np.array([b for _, b in pairs])
        assert auc_binary(scores, pos) + auc_binary(scores, ~pos) == pytest.approx(1.0, abs=1e-12)


class TestAucMulticlass:
    def test_one_hot_correct(self):
        s = validate_evaluation_set(np.eye(3)[[0, 1, 2, 0, 2]], [1, 2, 3, 1, 3])
        assert auc_multiclass(s) == 1.0

    def test_identical_rows(self):
        s = validate_evaluation_set([[0.2, 0.3, 0.5]] * 6, [1, 2, 3, 1, 2, 3])
        assert auc_multiclass(s) == 0.5

    def test_worked_example_matches_oracle(self, worked):
        expected = pairwise_auc_oracle(worked.probabilities.tolist(), worked.labels.tolist(), 3)
        assert auc_multiclass(worked) == pytest.approx(float(expected), abs=1e-12)
        assert expected == pytest.approx(7 / 9)

    def test_missing_class(self):
        s = validate_evaluation_set([[0.5, 0.3, 0.2], [0.1, 0.8, 0.1]], [1, 2])
        with pytest.raises(DegenerateError, match="class 3"):
            auc_multiclass(s)

    def test_monotone_column_transform(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            m, n = int(rng.integers(2, 6)), int(rng.integers(10, 40))
            p = rng.dirichlet(np.ones(m), size=n)
            y = np.concatenate([np.arange(1, m + 1), rng.integers(1, m + 1, size=n - m)])
            base = auc_multiclass(validate_evaluation_set(p, y))
            col = int(rng.integers(m))
            q = p.copy()
            q[:, col] = q[:, col] ** 3
            # Rows no longer sum to one, so skip validation: only per-column
            # ranks matter here.
            transformed = EvaluationSet(q, y)
            assert auc_multiclass(transformed) == pytest.approx(base, abs=1e-12)
