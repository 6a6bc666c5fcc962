"""Small prediction tables bundled with the package.

``worked_example``
    Ten observations, three classes, with the probabilities used to
    illustrate the index construction.
``toy1_model1`` / ``toy1_model2``
    Twenty observations whose confusion matrices are
    ``[[5,0,1],[0,7,0],[0,0,7]]`` and ``[[5,1,0],[0,6,0],[0,0,8]]``: same
    accuracy, but model 1's single error is two classes away.  In both, the
    wrong observation is the second most confident of predicted class 1.
``toy2_model1`` / ``toy2_model2``
    Identical confusion matrix ``[[5,0,0],[0,7,0],[1,0,7]]``; the class-1
    observation predicted as 3 is the second most confident of its block in
    model 1 and the least confident in model 2.
``perfect``
    Six observations, all correctly classified.
"""

from importlib import resources

from ..io import read_prediction_csv

NAMES = (
    "worked_example",
    "toy1_model1",
    "toy1_model2",
    "toy2_model1",
    "toy2_model2",
    "perfect",
)


def dataset_path(name: str):
    if name not in NAMES:
        raise KeyError(f"unknown dataset {name!r}; available: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.csv")


def load(name: str):
    """Load a bundled table as a validated ``EvaluationSet``."""
    with resources.as_file(dataset_path(name)) as path:
        return read_prediction_csv(path)


def load_worked_example():
    return load("worked_example")
