"""Datasets: file I/O, splits, metrics and synthetic generators."""

from .dataset import LabeledDataset, ORIGIN_PERTURBATION
from .io import format_dataset, read_dataset, write_dataset
from .splits import split, kfold, downsample_majority
from .metrics import MetricsReport, evaluate, summarize
from .synth import (
    RiemannianNormalParams,
    NoiseSpec,
    sample_riemannian_normal,
    make_gmm_dataset,
    inject_label_noise,
    make_cap_dataset,
)

__all__ = [
    "LabeledDataset",
    "ORIGIN_PERTURBATION",
    "format_dataset",
    "read_dataset",
    "write_dataset",
    "split",
    "kfold",
    "downsample_majority",
    "MetricsReport",
    "evaluate",
    "summarize",
    "RiemannianNormalParams",
    "NoiseSpec",
    "sample_riemannian_normal",
    "make_gmm_dataset",
    "inject_label_noise",
    "make_cap_dataset",
]
