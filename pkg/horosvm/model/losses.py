"""
Training objectives over (mu, omega, b).

Both losses are built from the per-sample score mu <omega, x>_B - b and return
(loss, AmbientGradient). The omega gradient is the ambient one; the solver
projects it onto the sphere tangent space.

Hinge terms use a strict active set: a sample sitting exactly on a kink
contributes zero gradient.
"""

from typing import Tuple

import numpy as np

from ..core.geometry import poincare_inner, poincare_inner_grad
from ..core.manifold import AmbientGradient, ProductPoint
from ..data.dataset import LabeledDataset
from ..errors import EmptyDataset

LossValue = Tuple[float, AmbientGradient]


def _check(points: np.ndarray, labels: np.ndarray):
    if len(points) == 0:
        raise EmptyDataset("Loss needs at least one sample")


def scores(p: ProductPoint, points: np.ndarray) -> np.ndarray:
    """mu <omega, x_i>_B - b for every row of ``points``."""
    return p.mu.value * np.asarray(poincare_inner(p.omega.u, points)) - p.b.value


def perceptron_terms(p: ProductPoint, points: np.ndarray, labels: np.ndarray) -> LossValue:
    """Array form of perceptron_loss; labels are +/-1 floats."""
    _check(points, labels)
    mu = p.mu.value
    inner = np.asarray(poincare_inner(p.omega.u, points))
    slack = -labels * (mu * inner - p.b.value)
    active = slack > 0.0
    n = len(points)

    loss = float(np.sum(slack[active])) / n
    ya = labels[active]
    g_mu = -np.sum(ya * inner[active]) / n
    g_b = np.sum(ya) / n
    g_omega = -mu * (ya[:, None] * poincare_inner_grad(p.omega.u, points[active])).sum(axis=0) / n
    return loss, AmbientGradient(g_mu, g_omega, g_b)


def horosvm_terms(p: ProductPoint, points: np.ndarray, labels: np.ndarray,
                  c: float) -> LossValue:
    """Array form of horosvm_loss; labels are +/-1 floats."""
    _check(points, labels)
    mu = p.mu.value
    inner = np.asarray(poincare_inner(p.omega.u, points))
    hinge = 1.0 - labels * (mu * inner - p.b.value)
    active = hinge > 0.0

    loss = 0.5 * mu * mu + c * float(np.sum(hinge[active]))
    ya = labels[active]
    g_mu = mu - c * np.sum(ya * inner[active])
    g_b = c * np.sum(ya)
    g_omega = -c * mu * (ya[:, None] * poincare_inner_grad(p.omega.u, points[active])).sum(axis=0)
    return loss, AmbientGradient(g_mu, g_omega, g_b)


def perceptron_loss(p: ProductPoint, dataset: LabeledDataset) -> LossValue:
    """
    Mean perceptron loss (1/N) sum_i max(0, -y_i (mu <omega, x_i>_B - b)).

    Args:
        p: Parameters (mu, omega, b)
        dataset: Samples with +/-1 labels

    Returns:
        (loss, ambient gradient)
    """
    return perceptron_terms(p, dataset.points, dataset.binary_labels())


def horosvm_loss(p: ProductPoint, dataset: LabeledDataset, c: float) -> LossValue:
    """
    Soft-margin objective 1/2 mu^2 + c sum_i max(0, 1 - y_i (mu <omega, x_i>_B - b)).

    Args:
        p: Parameters (mu, omega, b)
        dataset: Samples with +/-1 labels
        c: Tradeoff between margin width and hinge penalties (> 0)

    Returns:
        (loss, ambient gradient)
    """
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}")
    return horosvm_terms(p, dataset.points, dataset.binary_labels(), c)
