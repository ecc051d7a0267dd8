"""
Binary horospherical classifier.

A HoroClassifier labels x by the sign of mu <omega, x>_B - b: positive inside
the horoball bounded by its horosphere, negative outside. Training searches
(mu, omega, b) on R+ x S^{n-1} x R+ with the Riemannian solvers, so the
learned offset b is always positive.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from ..core.geometry import (
    Horosphere,
    PoincarePoint,
    poincare_inner,
    uniform_directions,
)
from ..core.manifold import AmbientGradient, ProductPoint
from ..core.optim import OptimConfig, OptimizerReport, RiemannianSolver
from ..data.dataset import LabeledDataset
from ..data.splits import downsample_majority
from ..errors import DimensionMismatch, EmptyDataset, SingleClassDataset
from .losses import horosvm_terms, perceptron_terms

logger = logging.getLogger(__name__)

DEFAULT_C = 1.0
DEFAULT_RESTARTS = 5
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1

# Initial (mu, b) of every restart
INITIAL_MU = 1.0
INITIAL_B = 1.0


class LossKind(Enum):
    """Training objectives"""
    PERCEPTRON = "perceptron"
    HOROSVM = "horosvm"


@dataclass
class TrainConfig:
    """
    Training hyperparameters.

    Attributes:
        c: Soft-margin tradeoff (HoroSVM only)
        optim: Solver settings
        seed: Base seed; restart initializations are drawn from it
        restarts: Independent optimizations; the lowest final loss wins
        workers: Threads for one-vs-rest training
        downsample_ratio: Positive:negative ratio for majority downsampling (None = off)
    """
    c: float = DEFAULT_C
    optim: OptimConfig = field(default_factory=OptimConfig)
    seed: int = DEFAULT_SEED
    restarts: int = DEFAULT_RESTARTS
    workers: int = DEFAULT_WORKERS
    downsample_ratio: Optional[float] = None

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.downsample_ratio is not None and not self.downsample_ratio > 0:
            raise ValueError(f"downsample_ratio must be positive, got {self.downsample_ratio}")


@dataclass(frozen=True)
class HoroClassifier:
    """Decision rule sign(mu <omega, x>_B - b); zero scores count as +1."""
    boundary: Horosphere

    @classmethod
    def from_point(cls, p: ProductPoint) -> "HoroClassifier":
        return cls(p.horosphere)

    @property
    def dim(self) -> int:
        return self.boundary.dim

    def decision_value(self, x):
        """Pre-sign score for one point (float) or a batch of rows (array)."""
        coords = x.coords if isinstance(x, PoincarePoint) else np.asarray(x, dtype=float)
        if coords.shape[-1] != self.dim:
            raise DimensionMismatch(
                f"Point dimension {coords.shape[-1]} does not match classifier dim {self.dim}"
            )
        h = self.boundary
        value = h.mu * np.asarray(poincare_inner(h.omega, coords)) - h.b
        return float(value) if np.ndim(value) == 0 else value

    def signed_distance(self, x):
        """Decision value divided by mu: signed hyperbolic distance to the boundary."""
        return self.decision_value(x) / self.boundary.mu

    def predict(self, points) -> np.ndarray:
        values = np.atleast_1d(self.decision_value(points))
        return np.where(values >= 0.0, 1, -1)

    def margin(self, dataset: LabeledDataset) -> float:
        """Smallest signed distance y_i d(x_i) over a +/-1 labeled dataset."""
        y = dataset.binary_labels()
        return float(np.min(y * self.signed_distance(dataset.points)))


def decision_value(clf: HoroClassifier, x):
    """mu <omega, x>_B - b."""
    return clf.decision_value(x)


def _binary_arrays(dataset: LabeledDataset) -> Tuple[np.ndarray, np.ndarray]:
    y = dataset.binary_labels()
    return dataset.points, y


def functional_margins(p: ProductPoint, dataset: LabeledDataset) -> np.ndarray:
    points, y = _binary_arrays(dataset)
    return y * (p.mu.value * np.asarray(poincare_inner(p.omega.u, points)) - p.b.value)


def margin(p: ProductPoint, dataset: LabeledDataset) -> float:
    """
    Geometric margin min_i y_i (mu <omega, x_i>_B - b) / mu.

    Negative when some sample is misclassified.
    """
    if len(dataset) == 0:
        raise EmptyDataset("Margin of an empty dataset")
    return float(np.min(functional_margins(p, dataset))) / p.mu.value


def renormalize(p: ProductPoint, dataset: LabeledDataset) -> ProductPoint:
    """
    Rescale (mu, b) by the minimal functional margin so that it becomes 1.

    Decisions and the geometric margin are unchanged.

    Raises:
        ValueError: the parameters do not separate the data (margin <= 0)
    """
    gamma = float(np.min(functional_margins(p, dataset)))
    if not gamma > 0:
        raise ValueError(f"Cannot renormalize: minimal functional margin is {gamma:.6g}")
    return ProductPoint.from_values(p.mu.value / gamma, p.omega.u, p.b.value / gamma)


def _objective(loss_kind: LossKind, points: np.ndarray, labels: np.ndarray, c: float):
    if loss_kind is LossKind.PERCEPTRON:
        def objective(p: ProductPoint):
            loss, g = perceptron_terms(p, points, labels)
            # the perceptron loss is homogeneous in (mu, b): fix the scale
            return loss, AmbientGradient(0.0, g.g_omega, g.g_b)
    else:
        def objective(p: ProductPoint):
            return horosvm_terms(p, points, labels, c)
    return objective


def _prepare(dataset: LabeledDataset, cfg: TrainConfig) -> LabeledDataset:
    y = dataset.binary_labels()
    if not (np.any(y > 0) and np.any(y < 0)):
        raise SingleClassDataset(f"Binary training needs both labels, got {dataset.classes}")
    dataset = dataset.without_origin_points()
    if cfg.downsample_ratio is not None:
        dataset = downsample_majority(dataset, cfg.downsample_ratio, seed=cfg.seed)
    return dataset


def run_restarts(dataset: LabeledDataset, cfg: TrainConfig,
                 loss_kind: LossKind = LossKind.HOROSVM
                 ) -> List[Tuple[ProductPoint, OptimizerReport]]:
    """
    One optimization per restart, all from omega uniform on the sphere and mu = b = 1.

    Returns:
        (final point, report) per restart, in restart order
    """
    loss_kind = LossKind(loss_kind)
    dataset = _prepare(dataset, cfg)
    points, labels = _binary_arrays(dataset)
    objective = _objective(loss_kind, points, labels, cfg.c)

    rng = np.random.default_rng(cfg.seed)
    starts = uniform_directions(rng, cfg.restarts, dataset.dim)

    results = []
    for i, omega0 in enumerate(starts):
        start = ProductPoint.from_values(INITIAL_MU, omega0, INITIAL_B)
        p, report = RiemannianSolver(cfg.optim).minimize(objective, start)
        logger.debug(f"Restart {i + 1}/{cfg.restarts}: loss={report.final_loss:.10g}, "
                     f"iters={report.iters_used}, stop={report.stop_reason}")
        results.append((p, report))
    return results


def train_binary(dataset: LabeledDataset, cfg: Optional[TrainConfig] = None,
                 loss_kind: LossKind = LossKind.HOROSVM
                 ) -> Tuple[HoroClassifier, OptimizerReport]:
    """
    Train a binary classifier on +/-1 labels.

    Args:
        dataset: Training data with labels in {-1, +1}, both present
        cfg: Training configuration (defaults if None)
        loss_kind: Perceptron or HoroSVM objective

    Returns:
        (classifier, report of the winning restart)

    Raises:
        LabelError: labels are not +/-1
        SingleClassDataset: only one label present
        NonFiniteObjective: the loss diverged
    """
    cfg = cfg or TrainConfig()
    loss_kind = LossKind(loss_kind)
    results = run_restarts(dataset, cfg, loss_kind)

    best_point, best_report = results[0]
    for p, report in results[1:]:
        if report.final_loss < best_report.final_loss:
            best_point, best_report = p, report

    clf = HoroClassifier.from_point(best_point)
    logger.info(f"Trained {loss_kind.value} on {len(dataset)} samples: "
                f"loss={best_report.final_loss:.6g}, iters={best_report.iters_used}, "
                f"converged={best_report.converged}, stop={best_report.stop_reason}")
    return clf, best_report
