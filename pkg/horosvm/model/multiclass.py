"""
One-vs-rest multiclass classification.

Each class gets a binary classifier trained on "this class" (+1) against
everything else (-1). Prediction takes the class with the largest signed
distance mu^-1 (mu <omega, x>_B - b); dividing by mu makes scores of
independently trained classifiers comparable.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..core.optim import OptimizerReport
from ..data.dataset import LabeledDataset
from ..errors import DimensionMismatch, SingleClassDataset
from .classifier import HoroClassifier, LossKind, TrainConfig, train_binary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OvRModel:
    """Ordered classes with one HoroClassifier each."""
    classes: Tuple
    per_class: Tuple[HoroClassifier, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "per_class", tuple(self.per_class))
        if len(self.classes) < 2:
            raise SingleClassDataset(f"One-vs-rest needs at least 2 classes, got {self.classes}")
        if len(self.classes) != len(self.per_class):
            raise ValueError(f"{len(self.classes)} classes but {len(self.per_class)} classifiers")
        dims = {clf.dim for clf in self.per_class}
        if len(dims) != 1:
            raise DimensionMismatch(f"Classifiers disagree on dimension: {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.per_class[0].dim


def signed_distances(model: OvRModel, points) -> np.ndarray:
    """(N, K) matrix of per-class signed distances, columns in class order."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.shape[1] != model.dim:
        raise DimensionMismatch(
            f"Point dimension {points.shape[1]} does not match model dim {model.dim}"
        )
    return np.column_stack([clf.signed_distance(points) for clf in model.per_class])


def predict_ovr(model: OvRModel, points) -> np.ndarray:
    """Argmax of signed distances; ties go to the earlier class."""
    best = np.argmax(signed_distances(model, points), axis=1)
    return np.asarray([model.classes[i] for i in best])


def train_ovr_with_reports(dataset: LabeledDataset, cfg: Optional[TrainConfig] = None,
                           classes: Optional[Sequence] = None,
                           loss_kind: LossKind = LossKind.HOROSVM
                           ) -> Tuple[OvRModel, Dict[object, OptimizerReport]]:
    """
    Train one binary classifier per class, keeping each winning restart's report.

    Args:
        dataset: Multiclass training data
        cfg: Training configuration; cfg.workers threads train classes concurrently
        classes: Class order (default: sorted labels of the dataset)
        loss_kind: Objective of the per-class classifiers

    Returns:
        (model, report per class label)

    Raises:
        SingleClassDataset: fewer than two classes, or a requested class is
            absent (its class-vs-rest split has a single label)
    """
    cfg = cfg or TrainConfig()
    classes = list(dataset.classes if classes is None else classes)
    if len(classes) < 2:
        raise SingleClassDataset(f"One-vs-rest needs at least 2 classes, got {classes}")

    counts = dataset.class_counts()
    for label in classes:
        if counts.get(label, 0) == 0 or counts.get(label, 0) == len(dataset):
            raise SingleClassDataset(f"Class {label!r} vs rest has only one label")

    def train_one(label):
        clf, report = train_binary(dataset.as_binary(label), cfg, loss_kind)
        logger.debug(f"Class {label!r}: loss={report.final_loss:.6g}, "
                     f"iters={report.iters_used}")
        return clf, report

    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        trained = list(executor.map(train_one, classes))

    logger.info(f"Trained one-vs-rest model over {len(classes)} classes")
    model = OvRModel(classes=tuple(classes), per_class=tuple(clf for clf, _ in trained))
    return model, {label: report for label, (_, report) in zip(classes, trained)}


def train_ovr(dataset: LabeledDataset, cfg: Optional[TrainConfig] = None,
              classes: Optional[Sequence] = None,
              loss_kind: LossKind = LossKind.HOROSVM) -> OvRModel:
    """Train one binary classifier per class (see train_ovr_with_reports)."""
    return train_ovr_with_reports(dataset, cfg, classes, loss_kind)[0]


def fit(dataset: LabeledDataset, cfg: Optional[TrainConfig] = None,
        loss_kind: LossKind = LossKind.HOROSVM):
    """
    Train the model matching the labels: binary for +/-1, one-vs-rest otherwise.

    Returns:
        HoroClassifier or OvRModel
    """
    cfg = cfg or TrainConfig()
    if dataset.is_binary:
        return train_binary(dataset, cfg, loss_kind)[0]
    return train_ovr(dataset, cfg, loss_kind=loss_kind)


def predict(model, points) -> np.ndarray:
    """Labels for a batch of points: +/-1 for binary models, class labels for OvR."""
    if isinstance(model, OvRModel):
        return predict_ovr(model, points)
    return model.predict(points)
