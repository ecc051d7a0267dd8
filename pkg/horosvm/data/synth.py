"""
Synthetic data on the Poincare ball.

- Riemannian normal sampling (density proportional to exp(-d(mean, x)^2 / 2 sigma^2))
- Gaussian-mixture datasets built from Riemannian normals
- horosphere-separable "cap" datasets with a guaranteed margin
- balanced label-noise injection

Every generator takes a seed and builds its own numpy Generator, so equal
seeds give bit-identical datasets.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from ..core.geometry import (
    EPS_BOUNDARY,
    Horosphere,
    IdealPoint,
    PoincarePoint,
    conformal_factor,
    expmap,
    horosphere_points,
    uniform_directions,
)
from ..errors import InsufficientClassMembers, LabelError
from .dataset import LabeledDataset

logger = logging.getLogger(__name__)

# Grid size of the tabulated radial CDF
RADIAL_GRID_SIZE = 4096

# Radial cutoff, in sigmas past the mode of the radial density
TAIL_SIGMAS = 10.0

# Samples are pulled back to this norm when the exponential map lands closer to the boundary
MAX_SAMPLE_NORM = 1.0 - 10.0 * EPS_BOUNDARY

DEFAULT_N_CLASSES = 2
DEFAULT_PER_CLASS = 200
DEFAULT_CENTROID_SIGMA = float(np.sqrt(1.5))
DEFAULT_CLUSTER_SIGMA = 1.0

DEFAULT_CAP_LEVEL = 1.0
DEFAULT_CAP_GAP = 0.3
DEFAULT_CAP_PER_CLASS = 100
DEFAULT_CAP_SPREAD = 1.5
DEFAULT_CAP_MAX_COS = 0.9


@dataclass(frozen=True, eq=False)
class RiemannianNormalParams:
    """Isotropic normal on the ball: centroid and spread in hyperbolic distance units."""
    mean: PoincarePoint
    sigma: float

    def __post_init__(self):
        if not isinstance(self.mean, PoincarePoint):
            object.__setattr__(self, "mean", PoincarePoint(self.mean))
        if not np.isfinite(self.sigma) or self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        object.__setattr__(self, "sigma", float(self.sigma))


@dataclass(frozen=True)
class NoiseSpec:
    """Fraction of labels to flip; balanced flips equal counts in both classes."""
    eta: float
    balanced: bool = True

    def __post_init__(self):
        if not 0.0 <= self.eta <= 0.5:
            raise ValueError(f"eta must be in [0, 0.5], got {self.eta}")


def radial_log_density(r: np.ndarray, sigma: float, dim: int) -> np.ndarray:
    """
    Unnormalized log-density of d(mean, x): -r^2/2sigma^2 + (n-1) log sinh r.

    log sinh r is evaluated as r + log1p(-exp(-2r)) - log 2, which stays
    finite for large r; r = 0 gives -inf when n > 1.
    """
    r = np.asarray(r, dtype=float)
    out = -r * r / (2.0 * sigma * sigma)
    if dim > 1:
        with np.errstate(divide="ignore"):
            log_sinh = r + np.log1p(-np.exp(-2.0 * r)) - np.log(2.0)
        out = out + (dim - 1) * log_sinh
    return out


def radial_cutoff(sigma: float, dim: int) -> float:
    """Upper end of the tabulated radial grid."""
    return (dim - 1) * sigma * sigma + TAIL_SIGMAS * sigma


def _radial_table(sigma: float, dim: int):
    grid = np.linspace(0.0, radial_cutoff(sigma, dim), RADIAL_GRID_SIZE)
    log_p = radial_log_density(grid, sigma, dim)
    density = np.exp(log_p - np.max(log_p))
    cdf = cumulative_trapezoid(density, grid, initial=0.0)
    return grid, cdf / cdf[-1]


def sample_riemannian_normal(params: RiemannianNormalParams, count: int,
                             seed: Optional[int] = None,
                             rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Draw points from a Riemannian normal distribution.

    The geodesic radius comes from the tabulated inverse CDF of its law, the
    direction is uniform in the tangent space at the mean, and the point is
    mapped with the exponential map.

    Args:
        params: Mean and sigma
        count: Number of samples (>= 1)
        seed: Seed for a fresh generator (ignored when ``rng`` is given)
        rng: Optional generator to draw from

    Returns:
        (count, n) array of points inside the ball
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if rng is None:
        rng = np.random.default_rng(seed)

    mean = params.mean.coords
    dim = params.mean.dim
    grid, cdf = _radial_table(params.sigma, dim)
    radii = np.interp(rng.random(count), cdf, grid)
    directions = uniform_directions(rng, count, dim)

    # tangent vectors with Riemannian norm r at the mean
    vecs = directions * (radii / conformal_factor(mean))[:, None]
    points = expmap(np.broadcast_to(mean, vecs.shape), vecs)

    norms = np.linalg.norm(points, axis=1)
    far = norms > MAX_SAMPLE_NORM
    if np.any(far):
        logger.debug(f"Pulled {int(far.sum())} sample(s) back from the boundary")
        points[far] *= (MAX_SAMPLE_NORM / norms[far])[:, None]
    return points


def make_gmm_dataset(n_classes: int = DEFAULT_N_CLASSES,
                     per_class: int = DEFAULT_PER_CLASS,
                     centroid_sigma: float = DEFAULT_CENTROID_SIGMA,
                     cluster_sigma: float = DEFAULT_CLUSTER_SIGMA,
                     dim: int = 2,
                     seed: int = 0) -> LabeledDataset:
    """
    Gaussian mixture of Riemannian normals.

    Centroids are drawn from a normal at the origin with ``centroid_sigma``;
    each class gets ``per_class`` points around its centroid. Labels are the
    class indices 0 .. n_classes - 1.
    """
    if n_classes < 2:
        raise ValueError(f"n_classes must be >= 2, got {n_classes}")
    if per_class < 1:
        raise ValueError(f"per_class must be >= 1, got {per_class}")
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")

    rng = np.random.default_rng(seed)
    origin = RiemannianNormalParams(PoincarePoint.origin(dim), centroid_sigma)
    centroids = sample_riemannian_normal(origin, n_classes, rng=rng)

    points = []
    labels = []
    for k, centroid in enumerate(centroids):
        cluster = RiemannianNormalParams(PoincarePoint(centroid), cluster_sigma)
        points.append(sample_riemannian_normal(cluster, per_class, rng=rng))
        labels.append(np.full(per_class, k, dtype=int))

    return LabeledDataset(np.concatenate(points), np.concatenate(labels))


def inject_label_noise(dataset: LabeledDataset, spec: NoiseSpec, seed: int = 0) -> LabeledDataset:
    """
    Flip round(eta * N) labels of a two-class dataset.

    With ``spec.balanced`` both classes lose the same number of labels; an odd
    total gives the extra flip to the larger class (the first in class order
    on a tie).

    Raises:
        LabelError: dataset does not have exactly two classes
        InsufficientClassMembers: a class has fewer members than flips requested
    """
    classes = dataset.classes
    if len(classes) != 2:
        raise LabelError(f"Label noise needs exactly two classes, got {classes}")
    total = int(np.floor(spec.eta * len(dataset) + 0.5))
    if total == 0:
        return dataset

    rng = np.random.default_rng(seed)
    labels = dataset.labels
    members = [np.flatnonzero(labels == c) for c in classes]

    if spec.balanced:
        counts = [total // 2, total // 2]
        if total % 2:
            larger = 1 if len(members[1]) > len(members[0]) else 0
            counts[larger] += 1
        for cls, idx, want in zip(classes, members, counts):
            if want > len(idx):
                raise InsufficientClassMembers(
                    f"Class {cls!r} has {len(idx)} member(s), cannot flip {want}"
                )
        flipped = np.concatenate([rng.choice(idx, size=want, replace=False)
                                  for idx, want in zip(members, counts)])
    else:
        flipped = rng.choice(len(dataset), size=total, replace=False)

    new_labels = np.array(labels)
    a, b = classes
    new_labels[flipped] = np.where(labels[flipped] == a, b, a)
    logger.debug(f"Flipped {total} of {len(dataset)} labels (eta={spec.eta:g})")
    return dataset.with_labels(new_labels)


def make_cap_dataset(omega=None,
                     level: float = DEFAULT_CAP_LEVEL,
                     gap: float = DEFAULT_CAP_GAP,
                     per_class: int = DEFAULT_CAP_PER_CLASS,
                     dim: int = 2,
                     seed: int = 0,
                     spread: float = DEFAULT_CAP_SPREAD,
                     max_cos: float = DEFAULT_CAP_MAX_COS) -> LabeledDataset:
    """
    Horosphere-separable data: positives beyond level + gap, negatives below level - gap.

    Each sample lies on a horosphere tangent at ``omega`` whose Busemann level
    is drawn uniformly from [level + gap, level + gap + spread] (label +1) or
    [level - gap - spread, level - gap] (label -1). The horosphere at ``level``
    separates the classes with geometric margin at least ``gap``.

    Args:
        omega: Tangency direction (random when None)
        level: Level of the separating horosphere
        gap: Half-width of the empty band around it
        per_class: Samples per class
        dim: Ambient dimension (ignored when omega is given)
        seed: Generator seed
        spread: Width of each class's level band
        max_cos: Bound on the center-offset cosine, keeps points off the tangency point
    """
    if per_class < 1:
        raise ValueError(f"per_class must be >= 1, got {per_class}")
    if gap <= 0 or spread <= 0:
        raise ValueError(f"gap and spread must be positive, got gap={gap}, spread={spread}")

    rng = np.random.default_rng(seed)
    if omega is None:
        omega = IdealPoint(uniform_directions(rng, 1, dim)[0])
    elif not isinstance(omega, IdealPoint):
        omega = IdealPoint(omega)

    pos_levels = rng.uniform(level + gap, level + gap + spread, size=per_class)
    neg_levels = rng.uniform(level - gap - spread, level - gap, size=per_class)

    points = [horosphere_points(Horosphere(mu=1.0, omega=omega, b=lam), 1,
                                max_cos=max_cos, rng=rng)[0]
              for lam in np.concatenate([pos_levels, neg_levels])]
    labels = np.concatenate([np.ones(per_class, dtype=int), -np.ones(per_class, dtype=int)])
    return LabeledDataset(np.array(points), labels)
