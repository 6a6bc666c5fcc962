"""Performance evaluation and model selection for ordinal classifiers."""

from .baselines import MetricSuite, accuracy, auc_binary, auc_multiclass, mse
from .comparison import ModelEvaluation, RankingTable, evaluate_model, rank_models
from .core import EvaluationSet, argmax_predict, confusion_matrix, validate_evaluation_set
from .exceptions import OrdinalEvalError
from .index import (
    IndexReport,
    build_classification_function,
    class_integrals,
    degrade_one_observation,
    error_intervals,
    evaluate_step_function,
    max_index,
    normalized_index,
    ordinal_index,
    ordinal_index_score,
)

__version__ = "0.1.0"

__all__ = [
    "EvaluationSet",
    "IndexReport",
    "MetricSuite",
    "ModelEvaluation",
    "OrdinalEvalError",
    "RankingTable",
    "accuracy",
    "argmax_predict",
    "auc_binary",
    "auc_multiclass",
    "build_classification_function",
    "class_integrals",
    "confusion_matrix",
    "degrade_one_observation",
    "error_intervals",
    "evaluate_model",
    "evaluate_step_function",
    "max_index",
    "mse",
    "normalized_index",
    "ordinal_index",
    "ordinal_index_score",
    "rank_models",
    "validate_evaluation_set",
]
