"""Prediction CSV files, JSON reports and plain-text tables.

A prediction file has the header ``p1,...,pM,label`` followed by one row per
observation: ``M`` decimal probabilities and a 1-based integer label.
"""

from __future__ import annotations

import csv
import json
import os
import re
import tempfile

from .core import EvaluationSet, validate_evaluation_set
from .exceptions import OrdinalEvalError

SCHEMA_VERSION = 1

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_INTEGER = re.compile(r"^[+-]?\d+$")


class PredictionFileError(OrdinalEvalError):
    """Malformed prediction file; ``line`` is the 1-based file line."""

    def __init__(self, path, line, message):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


def read_prediction_csv(path) -> EvaluationSet:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise PredictionFileError(path, 1, "file is empty")
    header = [h.strip() for h in rows[0]]
    m = len(header) - 1
    expected = [f"p{j}" for j in range(1, m + 1)] + ["label"]
    if m < 2 or header != expected:
        raise PredictionFileError(
            path, 1, f"header must be 'p1,...,pM,label' with M >= 2, got {','.join(header)!r}"
        )

    probs, labels = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not f.strip() for f in row):
            continue
        if len(row) != m + 1:
            raise PredictionFileError(
                path, lineno, f"expected {m + 1} fields, got {len(row)}"
            )
        values = []
        for col, field in enumerate(row[:m], start=1):
            field = field.strip()
            if not _DECIMAL.match(field):
                raise PredictionFileError(
                    path, lineno, f"column p{col}: {field!r} is not a decimal number"
                )
            values.append(float(field))
        label = row[m].strip()
        if not _INTEGER.match(label):
            raise PredictionFileError(
                path, lineno, f"column label: {label!r} is not an integer"
            )
        probs.append(values)
        labels.append(int(label))

    if not probs:
        raise PredictionFileError(path, None, "no observations")
    # Validation errors carry the 0-based row; blank lines are skipped above,
    # so map back through the list of data line numbers.
    data_lines = [
        i for i, r in enumerate(rows[1:], start=2) if r and any(f.strip() for f in r)
    ]
    try:
        return validate_evaluation_set(probs, labels)
    except OrdinalEvalError as exc:
        line = data_lines[exc.row] if exc.row is not None else None
        raise PredictionFileError(path, line, str(exc)) from exc


def write_prediction_csv(path, eval_set: EvaluationSet) -> None:
    m = eval_set.n_classes
    lines = [",".join(f"p{j}" for j in range(1, m + 1)) + ",label"]
    for p, y in zip(eval_set.probabilities, eval_set.labels):
        lines.append(",".join(repr(float(v)) for v in p) + f",{int(y)}")
    atomic_write(path, "\n".join(lines) + "\n")


def atomic_write(path, text: str) -> None:
    """Write via a temporary file so a failure never leaves partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def model_record(evaluation) -> dict:
    s = evaluation.suite
    r = evaluation.report
    return {
        "model": evaluation.model_name,
        "index": s.index,
        "normalized_index": s.normalized_index,
        "accuracy": s.accuracy,
        "mse": s.mse,
        "auc": s.auc,
        "k_max": r.max_value,
        "class_integrals": r.class_integrals.tolist(),
        "weights": r.weights.tolist(),
    }


def build_report(evaluations, ranking=None, extra=None) -> dict:
    report = {"schema_version": SCHEMA_VERSION}
    if extra:
        report.update(extra)
    report["models"] = [model_record(e) for e in evaluations]
    if ranking is not None:
        report["rankings"] = {
            metric: dict(zip(ranking.model_names, ranks))
            for metric, ranks in ranking.ranks.items()
        }
    return report


def dumps_report(report: dict) -> str:
    # json emits repr() floats: shortest round-tripping form, always
    # enough digits to restore the exact double.
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


_COLUMNS = (
    ("Model", "model"),
    ("Proposed Index", "index"),
    ("Normalized Index", "normalized_index"),
    ("AUC", "auc"),
    ("Accuracy", "accuracy"),
    ("MSE", "mse"),
)


def _align(rows) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = []
    for k, r in enumerate(rows):
        out.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))))
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def format_metric_table(report: dict, digits: int = 3) -> str:
    rows = [[title for title, _ in _COLUMNS]]
    for rec in report["models"]:
        rows.append(
            [rec["model"]] + [f"{rec[key]:.{digits}f}" for _, key in _COLUMNS[1:]]
        )
    return _align(rows)


def format_ranking_table(report: dict) -> str:
    ranks = report["rankings"]
    rows = [["Model", "Index/Normalized", "AUC", "Accuracy", "MSE"]]
    for rec in report["models"]:
        name = rec["model"]
        idx, norm = ranks["index"][name], ranks["normalized_index"][name]
        idx_cell = str(idx) if idx == norm else f"{idx}/{norm}"
        rows.append([name, idx_cell] + [str(ranks[k][name]) for k in ("auc", "accuracy", "mse")])
    return _align(rows)


def format_index_details(report: dict, digits: int = 3) -> str:
    lines = []
    for rec in report["models"]:
        integrals = ", ".join(f"{v:.{digits}f}" for v in rec["class_integrals"])
        weights = ", ".join(f"{v:.{digits}f}" for v in rec["weights"])
        lines.append(
            f"{rec['model']}: K = {rec['k_max']:.{digits}f}; "
            f"integrals ({integrals}); weights ({weights})"
        )
    return "\n".join(lines)
