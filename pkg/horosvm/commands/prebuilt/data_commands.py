"""
Dataset generation command.
"""

import logging

import numpy as np

from ...data.io import write_dataset
from ...data.synth import (
    DEFAULT_CAP_GAP,
    DEFAULT_CAP_LEVEL,
    DEFAULT_CAP_PER_CLASS,
    DEFAULT_N_CLASSES,
    DEFAULT_PER_CLASS,
    make_cap_dataset,
    make_gmm_dataset,
)
from ...utils.parsing import positive_float, positive_int
from ..base import register_command

logger = logging.getLogger(__name__)

DEFAULT_CENTROID_VAR = 1.5
DEFAULT_CLUSTER_VAR = 1.0


def _synth_options(parser):
    parser.add_argument("--kind", choices=["gmm", "cap"], default="gmm",
                        help="Gaussian mixture or horosphere-separable cap data (default: gmm)")
    parser.add_argument("--classes", type=positive_int, default=DEFAULT_N_CLASSES,
                        help=f"Number of mixture components (default: {DEFAULT_N_CLASSES})")
    parser.add_argument("--per-class", type=positive_int, default=None,
                        help=f"Samples per class (default: {DEFAULT_PER_CLASS} for gmm, "
                             f"{DEFAULT_CAP_PER_CLASS} for cap)")
    parser.add_argument("--centroid-var", type=positive_float, default=DEFAULT_CENTROID_VAR,
                        help=f"Variance sigma^2 of the centroid distribution "
                             f"(default: {DEFAULT_CENTROID_VAR})")
    parser.add_argument("--cluster-var", type=positive_float, default=DEFAULT_CLUSTER_VAR,
                        help=f"Variance sigma^2 of each cluster (default: {DEFAULT_CLUSTER_VAR})")
    parser.add_argument("--level", type=float, default=DEFAULT_CAP_LEVEL,
                        help=f"cap: level of the separating horosphere (default: {DEFAULT_CAP_LEVEL})")
    parser.add_argument("--gap", type=positive_float, default=DEFAULT_CAP_GAP,
                        help=f"cap: empty band half-width (default: {DEFAULT_CAP_GAP})")
    parser.add_argument("--dim", type=positive_int, default=2, help="Dimension (default: 2)")
    parser.add_argument("--seed", type=int, default=None, help="Generator seed")
    parser.add_argument("--out", required=True, help="Output dataset file")


@register_command(name="synth", configure=_synth_options)
def synth(args, settings):
    """Generate a synthetic dataset file."""
    seed = settings.train.seed if args.seed is None else args.seed
    if args.kind == "gmm":
        if args.classes < 2:
            raise ValueError(f"--classes must be >= 2, got {args.classes}")
        dataset = make_gmm_dataset(
            n_classes=args.classes,
            per_class=args.per_class or DEFAULT_PER_CLASS,
            centroid_sigma=float(np.sqrt(args.centroid_var)),
            cluster_sigma=float(np.sqrt(args.cluster_var)),
            dim=args.dim,
            seed=seed,
        )
    else:
        dataset = make_cap_dataset(
            level=args.level,
            gap=args.gap,
            per_class=args.per_class or DEFAULT_CAP_PER_CLASS,
            dim=args.dim,
            seed=seed,
        )

    write_dataset(args.out, dataset)
    logger.info(f"Wrote {args.kind} dataset ({len(dataset)} samples, dim={dataset.dim}) "
                f"to {args.out}")
    return 0
