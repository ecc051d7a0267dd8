"""
Labeled point sets on the Poincare ball.

A LabeledDataset is immutable: subsetting and relabeling return new
instances, so datasets can be shared freely across worker threads.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from ..core.geometry import EPS_BOUNDARY
from ..errors import EmptyDataset, InvariantError, LabelError, LengthMismatch

logger = logging.getLogger(__name__)

# Offset applied to exact-origin points before training
ORIGIN_PERTURBATION = 1e-12


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    """
    Points inside the unit ball with one label each.

    Attributes:
        points: (N, n) array, every row with norm < 1 - EPS_BOUNDARY
        labels: (N,) array of class identifiers (ints or strings)
    """
    points: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        points = np.array(self.points, dtype=float)
        labels = np.array(self.labels)
        if points.size == 0 or labels.size == 0:
            raise EmptyDataset("Dataset has no samples")
        if points.ndim != 2:
            raise ValueError(f"points must be a 2-D array, got shape {points.shape}")
        if labels.ndim != 1 or len(labels) != len(points):
            raise LengthMismatch(
                f"{len(points)} points but labels of shape {labels.shape}"
            )
        norms = np.linalg.norm(points, axis=1)
        bad = np.flatnonzero(~(norms < 1.0 - EPS_BOUNDARY))
        if bad.size:
            i = int(bad[0])
            raise InvariantError(i, norm=float(norms[i]))
        points.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LabeledDataset)
                and np.array_equal(self.points, other.points)
                and np.array_equal(self.labels, other.labels))

    __hash__ = None

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    @property
    def classes(self) -> List:
        """Distinct labels in sorted order."""
        return [_py(v) for v in np.unique(self.labels)]

    def class_counts(self) -> Dict:
        values, counts = np.unique(self.labels, return_counts=True)
        return {_py(v): int(c) for v, c in zip(values, counts)}

    def subset(self, indices: Sequence[int]) -> "LabeledDataset":
        idx = np.asarray(indices, dtype=int)
        return LabeledDataset(self.points[idx], self.labels[idx])

    def with_labels(self, labels) -> "LabeledDataset":
        return LabeledDataset(self.points, labels)

    @property
    def is_binary(self) -> bool:
        """True when labels are numeric and drawn from {-1, +1}."""
        if not np.issubdtype(self.labels.dtype, np.number):
            return False
        return set(np.unique(self.labels).tolist()) <= {-1, 1}

    def binary_labels(self) -> np.ndarray:
        """Labels as a float array of +/-1; raises LabelError otherwise."""
        if not self.is_binary:
            raise LabelError(f"Expected labels in {{-1, +1}}, got classes {self.classes}")
        return self.labels.astype(float)

    def as_binary(self, positive_label) -> "LabeledDataset":
        """One-vs-rest relabeling: +1 for ``positive_label``, -1 for everything else."""
        return self.with_labels(np.where(self.labels == positive_label, 1, -1))

    def without_origin_points(self) -> "LabeledDataset":
        """Nudge exact-origin points off the center, where the hemisphere split is undefined."""
        at_origin = np.flatnonzero(~np.any(self.points != 0.0, axis=1))
        if at_origin.size == 0:
            return self
        logger.warning(f"Perturbing {at_origin.size} origin point(s) by {ORIGIN_PERTURBATION:g} "
                       f"before training")
        points = np.array(self.points)
        points[at_origin, 0] = ORIGIN_PERTURBATION
        return LabeledDataset(points, self.labels)


def _py(value):
    """numpy scalar -> plain Python value (keeps YAML/CSV output clean)."""
    return value.item() if hasattr(value, "item") else value
