"""
Experiment commands: cv, noise-bench, probe-convexity.
"""

import csv
import logging
import sys
from pathlib import Path

import numpy as np

from ...core.geometry import uniform_directions
from ...data.io import read_dataset
from ...experiments import (
    DEFAULT_C_GRID,
    DEFAULT_ETAS,
    DEFAULT_FOLDS,
    DEFAULT_N_DATASETS,
    NOISE_COLUMNS,
    cross_validate,
    noise_benchmark,
)
from ...model.classifier import LossKind
from ...model.convexity import DEFAULT_N_GEODESICS, TARGETS, convexity_probe
from ...utils.parsing import float_list, positive_float, positive_int
from ..base import register_command
from .model_commands import add_train_options, train_config_from_args

logger = logging.getLogger(__name__)

DEFAULT_PROBE_SAMPLES = 20

# Probe samples are drawn with Euclidean norm in this range
PROBE_NORM_RANGE = (0.05, 0.95)


def _cv_options(parser):
    parser.add_argument("--data", required=True, help="Labeled dataset file")
    parser.add_argument("--c-grid", type=float_list, default=list(DEFAULT_C_GRID),
                        help="Candidate C values, e.g. '1,5,10' (default: 1,5,10)")
    parser.add_argument("--folds", type=int, default=DEFAULT_FOLDS,
                        help=f"Number of folds, >= 2 (default: {DEFAULT_FOLDS})")
    parser.add_argument("--no-stratify", action="store_true",
                        help="Plain k-fold instead of stratified folds")
    add_train_options(parser)


@register_command(name="cv", configure=_cv_options)
def cv(args, settings):
    """Cross-validate C and report mean +- std macro-F1 per value."""
    if args.folds < 2:
        raise ValueError(f"--folds must be >= 2, got {args.folds}")
    if any(c <= 0 for c in args.c_grid):
        raise ValueError(f"--c-grid values must be positive, got {args.c_grid}")
    dataset = read_dataset(args.data)
    cfg = train_config_from_args(args, settings)
    result = cross_validate(dataset, c_grid=args.c_grid, folds=args.folds, seed=cfg.seed,
                            cfg=cfg, loss_kind=LossKind(args.loss),
                            stratified=not args.no_stratify)
    sys.stdout.write(result.to_text())
    return 0


def _noise_options(parser):
    parser.add_argument("--datasets", type=positive_int, default=DEFAULT_N_DATASETS,
                        help=f"Number of generated replicas (default: {DEFAULT_N_DATASETS})")
    parser.add_argument("--etas", type=float_list, default=list(DEFAULT_ETAS),
                        help="Noise levels, e.g. '0:0.5:0.05' (default: 0,0.05,...,0.5)")
    parser.add_argument("--per-class", type=positive_int, default=200,
                        help="Samples per class in every replica (default: 200)")
    parser.add_argument("--dim", type=positive_int, default=2, help="Dimension (default: 2)")
    parser.add_argument("--out", default=None, help="CSV output file (default: stdout)")
    add_train_options(parser)


def _write_noise_csv(stream, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(NOISE_COLUMNS)
    for row in rows:
        values = row.to_dict()
        writer.writerow([f"{values[k]:.6g}" for k in NOISE_COLUMNS])


@register_command(name="noise-bench", configure=_noise_options)
def noise_bench(args, settings):
    """Train on label-noised Gaussian mixtures and tabulate train/test macro-F1 per eta."""
    if any(not 0.0 <= eta <= 0.5 for eta in args.etas):
        raise ValueError(f"--etas must lie in [0, 0.5], got {args.etas}")
    cfg = train_config_from_args(args, settings)
    rows = noise_benchmark(n_datasets=args.datasets, etas=args.etas, seed=cfg.seed, cfg=cfg,
                           per_class=args.per_class, dim=args.dim)
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            _write_noise_csv(f, rows)
        logger.info(f"Wrote {len(rows)} rows to {path}")
    else:
        _write_noise_csv(sys.stdout, rows)
    return 0


def _probe_options(parser):
    parser.add_argument("--samples", type=positive_int, default=DEFAULT_PROBE_SAMPLES,
                        help=f"Random labeled samples (default: {DEFAULT_PROBE_SAMPLES})")
    parser.add_argument("--geodesics", type=positive_int, default=DEFAULT_N_GEODESICS,
                        help=f"Segments per hemisphere (default: {DEFAULT_N_GEODESICS})")
    parser.add_argument("--target", choices=list(TARGETS), default="horosvm",
                        help="Function probed along the segments (default: horosvm)")
    parser.add_argument("--dim", type=positive_int, default=2, help="Dimension (default: 2)")
    parser.add_argument("--mu", type=positive_float, default=1.0, help="Fixed mu (default: 1)")
    parser.add_argument("--b", type=positive_float, default=1.0, help="Fixed b (default: 1)")
    parser.add_argument("--c", type=positive_float, default=1.0, help="Fixed C (default: 1)")
    parser.add_argument("--seed", type=int, default=None, help="Seed")


@register_command(name="probe-convexity", configure=_probe_options)
def probe_convexity(args, settings):
    """Count midpoint convexity and quasi-convexity violations along sphere geodesics."""
    if args.dim < 2:
        raise ValueError("--dim must be >= 2 for sphere geodesics")
    seed = settings.train.seed if args.seed is None else args.seed
    rng = np.random.default_rng(seed)
    directions = uniform_directions(rng, args.samples, args.dim)
    norms = rng.uniform(*PROBE_NORM_RANGE, size=args.samples)
    labels = rng.choice([-1, 1], size=args.samples)

    totals = {}
    for i, (u, r, y) in enumerate(zip(directions, norms, labels)):
        report = convexity_probe(r * u, int(y), n_geodesics=args.geodesics, seed=seed + i,
                                 target=args.target, mu=args.mu, b=args.b, c=args.c)
        for key, value in report.to_dict().items():
            if key in ("target", "max_excess"):
                continue
            totals[key] = totals.get(key, 0) + value

    lines = [f"target = {args.target}", f"samples = {args.samples}"]
    lines += [f"{key} = {value}" for key, value in totals.items()]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0
