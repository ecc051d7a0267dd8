"""
Classification metrics.

Per-class precision / recall / F1 treat each class in turn as the positive
class; macro-F1 is their unweighted mean.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sklearn.metrics import confusion_matrix, precision_recall_fscore_support

from ..errors import LengthMismatch


@dataclass
class MetricsReport:
    """Per-class scores plus the confusion matrix (rows = truth, columns = prediction)."""
    classes: List
    precision: Dict
    recall: Dict
    f1: Dict
    support: Dict
    macro_f1: float
    confusion: np.ndarray

    def to_dict(self) -> dict:
        return {
            'classes': list(self.classes),
            'precision': dict(self.precision),
            'recall': dict(self.recall),
            'f1': dict(self.f1),
            'support': dict(self.support),
            'macro_f1': self.macro_f1,
            'confusion': self.confusion.tolist(),
        }

    def to_text(self) -> str:
        """key = value lines, one metric per line."""
        lines = [f"classes = {','.join(str(c) for c in self.classes)}",
                 f"macro_f1 = {self.macro_f1:.6f}"]
        for c in self.classes:
            lines.append(f"precision[{c}] = {self.precision[c]:.6f}")
            lines.append(f"recall[{c}] = {self.recall[c]:.6f}")
            lines.append(f"f1[{c}] = {self.f1[c]:.6f}")
            lines.append(f"support[{c}] = {self.support[c]}")
        for i, c in enumerate(self.classes):
            row = ",".join(str(int(v)) for v in self.confusion[i])
            lines.append(f"confusion[{c}] = {row}")
        return "\n".join(lines) + "\n"


def _py(value):
    return value.item() if hasattr(value, "item") else value


def evaluate(predictions: Sequence, truth: Sequence,
             classes: Optional[Sequence] = None) -> MetricsReport:
    """
    Score predictions against ground truth.

    Args:
        predictions: Predicted labels
        truth: True labels, same length
        classes: Class order for the report (default: sorted union of labels)

    Raises:
        LengthMismatch: predictions and truth differ in length
    """
    predictions = np.asarray(predictions)
    truth = np.asarray(truth)
    if predictions.shape != truth.shape:
        raise LengthMismatch(f"{len(predictions)} predictions for {len(truth)} labels")

    if classes is None:
        classes = [_py(v) for v in np.unique(np.concatenate([truth, predictions]))]
    else:
        classes = [_py(v) for v in classes]

    precision, recall, f1, support = precision_recall_fscore_support(
        truth, predictions, labels=classes, zero_division=0
    )
    confusion = confusion_matrix(truth, predictions, labels=classes)

    return MetricsReport(
        classes=classes,
        precision={c: float(v) for c, v in zip(classes, precision)},
        recall={c: float(v) for c, v in zip(classes, recall)},
        f1={c: float(v) for c, v in zip(classes, f1)},
        support={c: int(v) for c, v in zip(classes, support)},
        macro_f1=float(np.mean(f1)),
        confusion=confusion,
    )


def summarize(values: Sequence[float]) -> Tuple[float, float]:
    """(mean, standard deviation) over trials."""
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std())
