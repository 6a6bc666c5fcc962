import numpy as np
import pytest

from ordinal_eval import datasets, validate_evaluation_set

# Observation table: probabilities for classes 1..3 and the true class.
WORKED_PROBS = [
    (0.288, 0.174, 0.538),
    (0.325, 0.478, 0.197),
    (0.828, 0.013, 0.159),
    (0.310, 0.106, 0.584),
    (0.120, 0.262, 0.618),
    (0.426, 0.167, 0.407),
    (0.849, 0.126, 0.025),
    (0.520, 0.401, 0.079),
    (0.147, 0.670, 0.183),
    (0.142, 0.593, 0.265),
]
WORKED_LABELS = [1, 2, 1, 3, 3, 3, 2, 1, 2, 3]


@pytest.fixture
def worked():
    return validate_evaluation_set(WORKED_PROBS, WORKED_LABELS)


@pytest.fixture(params=datasets.NAMES)
def bundled(request):
    return request.param, datasets.load(request.param)


def random_instance(rng, n_max=50, m_range=(2, 5), p_correct=0.5):
    """Random probability matrix with labels biased towards the argmax."""
    m = int(rng.integers(m_range[0], m_range[1] + 1))
    n = int(rng.integers(1, n_max + 1))
    p = rng.dirichlet(np.ones(m), size=n)
    pred = p.argmax(axis=1) + 1
    labels = np.where(rng.random(n) < p_correct, pred, rng.integers(1, m + 1, size=n))
    return validate_evaluation_set(p, labels)


# Acceptance bookkeeping: tests/test_acceptance.py records one line per
# criterion here, printed at the end of the session.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
