"""
HoroSVM - horospherical large-margin classifiers on the Poincare ball.

This package provides:
- closed-form Poincare-ball geometry (distances, Busemann function, horospheres)
- Riemannian gradient descent and conjugate gradient on R+ x S^{n-1} x R+
- horospherical perceptron and soft-margin HoroSVM classifiers, one-vs-rest
- synthetic data generation, cross-validation and label-noise experiments
"""

__version__ = "1.0.0"

from .core.geometry import Horosphere, IdealPoint, PoincarePoint
from .data.dataset import LabeledDataset
from .data.io import read_dataset, write_dataset
from .model import (
    HoroClassifier,
    LossKind,
    OvRModel,
    TrainConfig,
    fit,
    predict,
    train_binary,
    train_ovr,
)

__all__ = [
    "Horosphere",
    "IdealPoint",
    "PoincarePoint",
    "LabeledDataset",
    "read_dataset",
    "write_dataset",
    "HoroClassifier",
    "LossKind",
    "OvRModel",
    "TrainConfig",
    "fit",
    "predict",
    "train_binary",
    "train_ovr",
]
