"""
Model commands: train, predict, eval.

Results go to stdout as "key = value" lines so they can be parsed or piped.
"""

import logging
import sys
from dataclasses import replace

from ...core.optim import OptimConfig, OptimMethod
from ...data.dataset import LabeledDataset
from ...data.io import format_dataset, read_dataset, write_dataset
from ...data.metrics import evaluate
from ...model.classifier import LossKind, train_binary
from ...model.multiclass import predict, train_ovr_with_reports
from ...model.serialization import load_model, save_model
from ...utils.parsing import positive_float, positive_int
from ..base import register_command

logger = logging.getLogger(__name__)


def add_train_options(parser):
    """Training flags shared with cv; unset flags fall back to the settings file."""
    parser.add_argument("--loss", choices=[k.value for k in LossKind],
                        default=LossKind.HOROSVM.value,
                        help="Training objective (default: horosvm)")
    parser.add_argument("--c", type=positive_float, default=None,
                        help="Soft-margin tradeoff C")
    parser.add_argument("--restarts", type=positive_int, default=None,
                        help="Random restarts per binary problem")
    parser.add_argument("--seed", type=int, default=None, help="Seed")
    parser.add_argument("--workers", type=positive_int, default=None,
                        help="Worker threads")
    parser.add_argument("--method", choices=[m.value for m in OptimMethod], default=None,
                        help="Solver (default from settings: cg)")
    parser.add_argument("--max-iters", type=positive_int, default=None,
                        help="Solver iteration cap")


def train_config_from_args(args, settings, **extra):
    optim = settings.optim
    if args.method is not None or args.max_iters is not None:
        data = optim.to_dict()
        if args.method is not None:
            data['method'] = args.method
        if args.max_iters is not None:
            data['max_iters'] = args.max_iters
        optim = OptimConfig.from_dict(data)
    cfg = settings.train_config(c=args.c, restarts=args.restarts, seed=args.seed,
                                workers=args.workers, **extra)
    return replace(cfg, optim=optim)


def _train_options(parser):
    parser.add_argument("--data", required=True, help="Training dataset file")
    add_train_options(parser)
    parser.add_argument("--downsample-ratio", type=positive_float, default=None,
                        help="Downsample the majority class to this positive:negative ratio")
    parser.add_argument("--model-out", required=True, help="Model file to write")


@register_command(name="train", configure=_train_options)
def train(args, settings):
    """Train a binary or one-vs-rest classifier."""
    dataset = read_dataset(args.data)
    cfg = train_config_from_args(args, settings, downsample_ratio=args.downsample_ratio)
    loss_kind = LossKind(args.loss)

    lines = []
    if dataset.is_binary:
        model, report = train_binary(dataset, cfg, loss_kind)
        lines.append(f"final_loss = {report.final_loss:.10g}")
        lines.append(f"margin = {model.margin(dataset):.10g}")
        lines.append(f"iterations = {report.iters_used}")
        lines.append(f"converged = {str(report.converged).lower()}")
    else:
        model, reports = train_ovr_with_reports(dataset, cfg, loss_kind=loss_kind)
        lines.append(f"classes = {','.join(str(c) for c in model.classes)}")
        for label, clf in zip(model.classes, model.per_class):
            report = reports[label]
            lines.append(f"final_loss[{label}] = {report.final_loss:.10g}")
            lines.append(f"margin[{label}] = {clf.margin(dataset.as_binary(label)):.10g}")
            lines.append(f"iterations[{label}] = {report.iters_used}")
            lines.append(f"converged[{label}] = {str(report.converged).lower()}")

    save_model(args.model_out, model)
    lines.append(f"model = {args.model_out}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _predict_options(parser):
    parser.add_argument("--model", required=True, help="Model file")
    parser.add_argument("--data", required=True,
                        help="Dataset file (its label column is ignored)")
    parser.add_argument("--out", default=None,
                        help="Write predictions here (default: stdout)")


@register_command(name="predict", configure=_predict_options)
def predict_command(args, settings):
    """Predict labels for a dataset file."""
    model = load_model(args.model)
    dataset = read_dataset(args.data)
    predicted = LabeledDataset(dataset.points, predict(model, dataset.points))
    if args.out:
        write_dataset(args.out, predicted)
        logger.info(f"Wrote {len(predicted)} predictions to {args.out}")
    else:
        sys.stdout.write(format_dataset(predicted))
    return 0


def _eval_options(parser):
    parser.add_argument("--model", required=True, help="Model file")
    parser.add_argument("--data", required=True, help="Labeled dataset file")


@register_command(name="eval", configure=_eval_options)
def eval_command(args, settings):
    """Report precision, recall, F1 and the confusion matrix of a model."""
    model = load_model(args.model)
    dataset = read_dataset(args.data)
    report = evaluate(predict(model, dataset.points), dataset.labels)
    sys.stdout.write(report.to_text())
    return 0
