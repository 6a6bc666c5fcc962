"""Command-line interface.

Exit status: 0 on success, 2 for bad input or configuration, 1 for anything
unexpected.  Output files are written atomically, so a failing run never
leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

import numpy as np

from .comparison import evaluate_model, rank_models
from .exceptions import ConfigError, LabelMismatchError, OrdinalEvalError
from .index import build_classification_function
from .io import (
    atomic_write,
    build_report,
    dumps_report,
    format_index_details,
    format_metric_table,
    format_ranking_table,
    read_prediction_csv,
)
from .plot import step_function_svg
from .simulation import MODELS, CvConfig, SimulationConfig, generate_dataset, kfold_cv

log = logging.getLogger("ordinal_eval")

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2


def _model_name(path: str, taken: set) -> str:
    base = os.path.splitext(os.path.basename(path))[0] or "model"
    name, k = base, 2
    while name in taken:
        name = f"{base}#{k}"
        k += 1
    taken.add(name)
    return name


def _emit(report: dict, args, text: str) -> None:
    if args.json:
        payload = dumps_report(report)
        if args.json == "-":
            sys.stdout.write(payload)
            return
        atomic_write(args.json, payload)
    print(text)


def cmd_evaluate(args) -> int:
    eval_set = read_prediction_csv(args.input)
    name = args.name or _model_name(args.input, set())
    evaluation = evaluate_model(name, eval_set)
    report = build_report([evaluation])
    text = "\n".join(
        [
            f"N = {eval_set.n_observations}, M = {eval_set.n_classes}",
            format_metric_table(report, args.digits),
            format_index_details(report, args.digits),
        ]
    )
    _emit(report, args, text)
    return EXIT_OK


def cmd_compare(args) -> int:
    if len(args.inputs) < 2:
        raise ConfigError("compare needs at least two prediction files")
    sets = [read_prediction_csv(p) for p in args.inputs]
    first = sets[0]
    for path, s in zip(args.inputs[1:], sets[1:]):
        if s.n_classes != first.n_classes or not np.array_equal(s.labels, first.labels):
            raise LabelMismatchError(
                f"{path}: labels (or number of classes) differ from {args.inputs[0]}"
            )
    taken: set = set()
    names = args.names.split(",") if args.names else [_model_name(p, taken) for p in args.inputs]
    if len(names) != len(sets):
        raise ConfigError(f"--names lists {len(names)} names for {len(sets)} files")
    evaluations = [evaluate_model(n, s) for n, s in zip(names, sets)]
    ranking = rank_models(evaluations)
    report = build_report(evaluations, ranking)
    text = "\n\n".join(
        [format_metric_table(report, args.digits), format_ranking_table(report)]
    )
    _emit(report, args, text)
    return EXIT_OK


def cmd_simulate(args) -> int:
    names = [m.strip() for m in args.models.split(",") if m.strip()]
    unknown = [m for m in names if m not in MODELS]
    if not names or unknown:
        raise ConfigError(
            f"unknown model(s) {','.join(unknown) or '(none)'}; choose from {','.join(MODELS)}"
        )
    if len(set(names)) != len(names):
        raise ConfigError("--models lists a model twice")
    config = SimulationConfig(n_observations=args.n, seed=args.seed)
    if not 2 <= args.folds <= args.n:
        raise ConfigError(f"--folds must be in 2..{args.n}, got {args.folds}")
    cv = CvConfig(folds=args.folds, seed=args.seed)
    dataset = generate_dataset(config)

    evaluations = []
    for name in names:
        est = MODELS[name]()
        if name == "knn":
            est.set_params(n_neighbors=args.k)
        log.info("cross-validating %s", name)
        evaluations.append(evaluate_model(name, kfold_cv(dataset, est, cv)))
    ranking = rank_models(evaluations)
    report = build_report(
        evaluations,
        ranking,
        extra={
            "simulation": {
                "n_observations": config.n_observations,
                "seed": config.seed,
                "folds": cv.folds,
                "k_neighbors": args.k,
            }
        },
    )
    if args.dataset_out:
        dataset.to_csv(args.dataset_out)
    args.json = args.out
    text = "\n\n".join(
        [format_metric_table(report, args.digits), format_ranking_table(report)]
    )
    _emit(report, args, text)
    return EXIT_OK


def cmd_plot(args) -> int:
    eval_set = read_prediction_csv(args.input)
    sc = build_classification_function(eval_set)
    atomic_write(args.out, step_function_svg(sc, title=args.title))
    print(f"wrote {args.out} ({sc.n_observations} steps per function)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordinal-eval",
        description="Evaluate and rank ordinal classifiers with the error-interval index.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="metric suite for one prediction file")
    p.add_argument("input", help="CSV with header p1,...,pM,label")
    p.add_argument("--name", help="model name in the report (default: file stem)")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--digits", type=int, default=3, help="decimals in the text table")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="metric and ranking tables for several models")
    p.add_argument("inputs", nargs="+", help="two or more prediction CSVs with identical labels")
    p.add_argument("--names", help="comma-separated model names, one per file")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--digits", type=int, default=3)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("simulate", help="synthetic five-class study with k-fold CV")
    p.add_argument("--n", type=int, default=7500, help="observations, divisible by 5 (default 7500)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--models", default="knn,gauss,majority", help=f"subset of {','.join(MODELS)}")
    p.add_argument("--k", type=int, default=5, help="neighbours for knn (default 5)")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--dataset-out", metavar="PATH", help="also write the generated data as CSV")
    p.add_argument("--digits", type=int, default=3)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("plot", help="SVG of the model and exact step functions")
    p.add_argument("input", help="prediction CSV")
    p.add_argument("--out", required=True, metavar="PATH", help="SVG output path")
    p.add_argument("--title")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OrdinalEvalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
