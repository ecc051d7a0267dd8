"""Horospherical classifiers: losses, training, one-vs-rest, probes and model files."""

from .losses import perceptron_loss, horosvm_loss
from .classifier import (
    LossKind,
    TrainConfig,
    HoroClassifier,
    decision_value,
    margin,
    renormalize,
    run_restarts,
    train_binary,
)
from .multiclass import OvRModel, train_ovr, train_ovr_with_reports, predict, predict_ovr, signed_distances, fit
from .convexity import ConvexityReport, convexity_probe
from .serialization import save_model, load_model

__all__ = [
    "perceptron_loss",
    "horosvm_loss",
    "LossKind",
    "TrainConfig",
    "HoroClassifier",
    "decision_value",
    "margin",
    "renormalize",
    "run_restarts",
    "train_binary",
    "OvRModel",
    "train_ovr",
    "train_ovr_with_reports",
    "predict",
    "predict_ovr",
    "signed_distances",
    "fit",
    "ConvexityReport",
    "convexity_probe",
    "save_model",
    "load_model",
]
