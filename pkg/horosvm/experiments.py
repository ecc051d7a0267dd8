"""
Evaluation workflows: cross-validated selection of C and the label-noise benchmark.

Both run independent units of work (folds, dataset replicas) on a thread pool
and collect results in submission order, so output does not depend on
scheduling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence

from .data.dataset import LabeledDataset
from .data.metrics import evaluate, summarize
from .data.splits import kfold, split
from .data.synth import (
    DEFAULT_CENTROID_SIGMA,
    DEFAULT_CLUSTER_SIGMA,
    DEFAULT_PER_CLASS,
    NoiseSpec,
    inject_label_noise,
    make_gmm_dataset,
)
from .model.classifier import LossKind, TrainConfig, train_binary
from .model.multiclass import fit, predict

logger = logging.getLogger(__name__)

DEFAULT_C_GRID = (1.0, 5.0, 10.0)
DEFAULT_FOLDS = 5
DEFAULT_ETAS = tuple(round(0.05 * i, 2) for i in range(11))
DEFAULT_N_DATASETS = 100
DEFAULT_TRAIN_FRACTION = 0.5


@dataclass
class CVRow:
    """Scores of one C value."""
    c: float
    mean_f1: float
    std_f1: float
    fold_f1: List[float] = field(default_factory=list)


@dataclass
class CVResult:
    rows: List[CVRow]
    best_c: float

    def to_text(self) -> str:
        lines = [f"c = {row.c:g}: macro_f1 = {row.mean_f1:.4f} +- {row.std_f1:.4f}"
                 for row in self.rows]
        lines.append(f"best_c = {self.best_c:g}")
        return "\n".join(lines) + "\n"


@dataclass
class NoiseRow:
    """Mean and standard deviation of macro-F1 at one noise level."""
    eta: float
    train_f1_mean: float
    train_f1_std: float
    test_f1_mean: float
    test_f1_std: float

    def to_dict(self) -> dict:
        return {
            'eta': self.eta,
            'train_f1_mean': self.train_f1_mean,
            'train_f1_std': self.train_f1_std,
            'test_f1_mean': self.test_f1_mean,
            'test_f1_std': self.test_f1_std,
        }


NOISE_COLUMNS = ("eta", "train_f1_mean", "train_f1_std", "test_f1_mean", "test_f1_std")
BINARY_CLASSES = (-1, 1)


def _macro_f1(model, dataset: LabeledDataset, classes) -> float:
    return evaluate(predict(model, dataset.points), dataset.labels, classes=classes).macro_f1


def select_c(rows: Sequence[CVRow]) -> float:
    """Highest mean F1; ties go to the smaller C."""
    best = None
    for row in sorted(rows, key=lambda r: r.c):
        if best is None or row.mean_f1 > best.mean_f1:
            best = row
    return best.c


def cross_validate(dataset: LabeledDataset,
                   c_grid: Sequence[float] = DEFAULT_C_GRID,
                   folds: int = DEFAULT_FOLDS,
                   seed: int = 0,
                   cfg: Optional[TrainConfig] = None,
                   loss_kind: LossKind = LossKind.HOROSVM,
                   stratified: bool = True) -> CVResult:
    """
    k-fold cross-validation of C, scored by validation macro-F1.

    Args:
        dataset: Labeled data (binary or multiclass)
        c_grid: Candidate C values
        folds: Number of folds (>= 2)
        seed: Fold seed; training uses cfg.seed
        cfg: Base training configuration, c is overridden per grid value
        loss_kind: Objective of the trained classifiers
        stratified: Stratify folds by class

    Returns:
        CVResult with one row per C (grid order) and the selected C
    """
    if not c_grid:
        raise ValueError("c_grid must not be empty")
    cfg = cfg or TrainConfig()
    pairs = kfold(dataset, k=folds, stratified=stratified, seed=seed)
    classes = dataset.classes

    def score(task):
        c, (train, valid) = task
        model = fit(train, replace(cfg, c=c), loss_kind)
        return _macro_f1(model, valid, classes)

    tasks = [(float(c), pair) for c in c_grid for pair in pairs]
    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        scores = list(executor.map(score, tasks))

    rows = []
    for i, c in enumerate(c_grid):
        fold_f1 = scores[i * folds:(i + 1) * folds]
        mean, std = summarize(fold_f1)
        logger.debug(f"C={c:g}: fold F1 {', '.join(f'{s:.4f}' for s in fold_f1)}")
        rows.append(CVRow(c=float(c), mean_f1=mean, std_f1=std, fold_f1=list(fold_f1)))

    best_c = select_c(rows)
    logger.info(f"Cross-validation selected C={best_c:g}")
    return CVResult(rows=rows, best_c=best_c)


def noise_benchmark(n_datasets: int = DEFAULT_N_DATASETS,
                    etas: Sequence[float] = DEFAULT_ETAS,
                    seed: int = 0,
                    cfg: Optional[TrainConfig] = None,
                    per_class: int = DEFAULT_PER_CLASS,
                    centroid_sigma: float = DEFAULT_CENTROID_SIGMA,
                    cluster_sigma: float = DEFAULT_CLUSTER_SIGMA,
                    dim: int = 2,
                    train_fraction: float = DEFAULT_TRAIN_FRACTION) -> List[NoiseRow]:
    """
    Robustness to training-label noise on two-class Gaussian mixtures.

    Replica i is generated with seed + i and split into stratified train/test
    halves. For every eta the training labels are flipped (balanced) and a
    binary classifier is trained on them, with the second mixture component
    as the positive class. Train F1 is measured against the noisy labels,
    test F1 against the clean test labels.

    Returns:
        One NoiseRow per eta, in the given order
    """
    if n_datasets < 1:
        raise ValueError(f"n_datasets must be >= 1, got {n_datasets}")
    if not etas:
        raise ValueError("etas must not be empty")
    cfg = cfg or TrainConfig()
    workers = cfg.workers
    # replicas run side by side; training inside a replica stays sequential
    train_cfg = replace(cfg, workers=1)
    specs = [NoiseSpec(float(eta)) for eta in etas]

    def replica(i: int):
        data = make_gmm_dataset(2, per_class, centroid_sigma, cluster_sigma, dim, seed=seed + i)
        train, test = split(data, train_fraction, stratified=True, seed=seed + i)
        positive = data.classes[-1]
        clean_test = test.as_binary(positive)
        out = []
        for spec in specs:
            noisy = inject_label_noise(train, spec, seed=seed + i).as_binary(positive)
            clf, _ = train_binary(noisy, train_cfg)
            out.append((_macro_f1(clf, noisy, BINARY_CLASSES),
                        _macro_f1(clf, clean_test, BINARY_CLASSES)))
        logger.debug(f"Replica {i}: test F1 {', '.join(f'{t:.3f}' for _, t in out)}")
        return out

    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(replica, range(n_datasets)))

    rows = []
    for j, spec in enumerate(specs):
        train_f1 = [r[j][0] for r in results]
        test_f1 = [r[j][1] for r in results]
        train_mean, train_std = summarize(train_f1)
        test_mean, test_std = summarize(test_f1)
        rows.append(NoiseRow(spec.eta, train_mean, train_std, test_mean, test_std))
        logger.info(f"eta={spec.eta:g}: train F1 {train_mean:.4f}, test F1 {test_mean:.4f}")
    return rows
