"""
Train/test splits, cross-validation folds and majority-class downsampling.

Splits and folds are index permutations drawn by scikit-learn with a fixed
random_state, so they are deterministic given the seed and never lose or
duplicate samples.
"""

import logging
from typing import List, Tuple

import numpy as np
from sklearn.model_selection import KFold, StratifiedKFold, train_test_split

from ..errors import ClassTooSmall
from .dataset import LabeledDataset

logger = logging.getLogger(__name__)


def _require_class_size(dataset: LabeledDataset, minimum: int, why: str):
    for label, count in dataset.class_counts().items():
        if count < minimum:
            raise ClassTooSmall(
                f"Class {label!r} has {count} member(s); {why} needs at least {minimum}"
            )


def split(dataset: LabeledDataset, train_fraction: float = 0.8,
          stratified: bool = True, seed: int = 0) -> Tuple[LabeledDataset, LabeledDataset]:
    """
    Split into (train, test).

    Args:
        dataset: Dataset to split
        train_fraction: Fraction of samples in the training part, in (0, 1)
        stratified: Preserve per-class proportions (to +/-1 sample)
        seed: random_state for the permutation

    Raises:
        ValueError: train_fraction outside (0, 1)
        ClassTooSmall: a class has fewer than 2 members under stratification
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")
    if stratified:
        _require_class_size(dataset, 2, "a stratified split")

    idx = np.arange(len(dataset))
    try:
        train_idx, test_idx = train_test_split(
            idx,
            train_size=train_fraction,
            stratify=dataset.labels if stratified else None,
            random_state=seed,
            shuffle=True,
        )
    except ValueError as e:
        # sklearn rejects splits that leave a part smaller than the class count
        raise ClassTooSmall(str(e)) from e

    return dataset.subset(np.sort(train_idx)), dataset.subset(np.sort(test_idx))


def kfold(dataset: LabeledDataset, k: int = 5, stratified: bool = True,
          seed: int = 0) -> List[Tuple[LabeledDataset, LabeledDataset]]:
    """
    k (train, validation) pairs whose validation parts partition the dataset.

    Raises:
        ValueError: k < 2 or k > len(dataset)
        ClassTooSmall: a class has fewer than k members under stratification
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k > len(dataset):
        raise ValueError(f"k={k} exceeds the number of samples ({len(dataset)})")

    idx = np.arange(len(dataset))
    if stratified:
        _require_class_size(dataset, k, f"{k}-fold stratification")
        splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=seed)
        folds = splitter.split(idx, dataset.labels)
    else:
        splitter = KFold(n_splits=k, shuffle=True, random_state=seed)
        folds = splitter.split(idx)

    return [(dataset.subset(np.sort(tr)), dataset.subset(np.sort(va))) for tr, va in folds]


def downsample_majority(dataset: LabeledDataset, ratio: float = 1.0,
                        seed: int = 0) -> LabeledDataset:
    """
    Drop majority-class samples until positives : negatives = ratio.

    Only the over-represented class is reduced, and it keeps at least one
    sample. Labels must be +/-1.

    Args:
        dataset: Binary (+/-1) training data
        ratio: Target positive:negative ratio (1.0 = balanced)
        seed: Seed for choosing the kept samples
    """
    if ratio <= 0:
        raise ValueError(f"ratio must be > 0, got {ratio}")
    y = dataset.binary_labels()
    pos = np.flatnonzero(y > 0)
    neg = np.flatnonzero(y < 0)
    rng = np.random.default_rng(seed)

    if len(neg) * ratio > len(pos):
        keep_neg = max(1, int(round(len(pos) / ratio)))
        if keep_neg >= len(neg):
            return dataset
        neg = rng.choice(neg, size=keep_neg, replace=False)
    elif len(pos) > ratio * len(neg):
        keep_pos = max(1, int(round(ratio * len(neg))))
        if keep_pos >= len(pos):
            return dataset
        pos = rng.choice(pos, size=keep_pos, replace=False)
    else:
        return dataset

    kept = np.sort(np.concatenate([pos, neg]))
    logger.info(f"Downsampled majority class: {len(dataset)} -> {len(kept)} samples "
                f"(ratio {ratio:g})")
    return dataset.subset(kept)
