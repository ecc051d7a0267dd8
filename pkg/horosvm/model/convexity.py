"""
Numerical convexity probe for per-sample losses along sphere geodesics.

For a labeled sample (x, y) the direction sphere splits into hemisphere
A = {omega : y x.omega > 0} and hemisphere B = {omega : y x.omega < 0}. The probe
draws random great-circle segments with both endpoints in one hemisphere and
compares the loss at the arc midpoint with its endpoint values, with (mu, b)
held fixed.

Targets:
    chord       y |omega - x|^2, the squared chord behind the convexity argument
    perceptron  max(0, -y (mu <omega, x>_B - b))
    horosvm     1/2 mu^2 + c max(0, 1 - y (mu <omega, x>_B - b))

Midpoint convexity counts loss(mid) > (loss(a) + loss(b)) / 2 + tol on A;
quasi-convexity counts loss(mid) > max(loss(a), loss(b)) + tol. B gets the
mirrored concavity checks.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from ..core.geometry import PoincarePoint, poincare_inner, uniform_directions
from ..core.manifold import SpherePoint, geodesic_between_sphere_points
from ..errors import AntipodalError, DegeneratePoint

logger = logging.getLogger(__name__)

DEFAULT_N_GEODESICS = 1000
DEFAULT_TOLERANCE = 1e-9
TARGETS = ("chord", "perceptron", "horosvm")


@dataclass
class ConvexityReport:
    """Violation counts of one probe run."""
    target: str
    segments_a: int
    segments_b: int
    convexity_violations: int
    concavity_violations: int
    quasi_convexity_violations: int
    quasi_concavity_violations: int
    max_excess: float  # largest midpoint-convexity excess seen on A (<= 0 when none)

    @property
    def violations(self) -> int:
        return self.convexity_violations + self.concavity_violations

    def to_dict(self) -> Dict:
        return {
            'target': self.target,
            'segments_a': self.segments_a,
            'segments_b': self.segments_b,
            'convexity_violations': self.convexity_violations,
            'concavity_violations': self.concavity_violations,
            'quasi_convexity_violations': self.quasi_convexity_violations,
            'quasi_concavity_violations': self.quasi_concavity_violations,
            'max_excess': self.max_excess,
        }


def _target_fn(target: str, x: np.ndarray, y: float, mu: float, b: float,
               c: float) -> Callable[[np.ndarray], float]:
    if target == "chord":
        return lambda w: float(y * np.sum((w - x) ** 2))
    if target == "perceptron":
        return lambda w: max(0.0, -y * (mu * poincare_inner(w, x) - b))
    if target == "horosvm":
        return lambda w: 0.5 * mu * mu + c * max(0.0, 1.0 - y * (mu * poincare_inner(w, x) - b))
    raise ValueError(f"Unknown probe target '{target}' (choose from {', '.join(TARGETS)})")


def _hemisphere_points(rng: np.random.Generator, count: int, axis: np.ndarray) -> np.ndarray:
    """Uniform directions with axis . u > 0."""
    u = uniform_directions(rng, count, axis.size)
    side = u @ axis
    u[side < 0] *= -1.0
    return u[side != 0]


def convexity_probe(x, y: float, n_geodesics: int = DEFAULT_N_GEODESICS, seed: int = 0,
                    target: str = "horosvm", mu: float = 1.0, b: float = 1.0,
                    c: float = 1.0, tol: float = DEFAULT_TOLERANCE) -> ConvexityReport:
    """
    Probe midpoint convexity on hemisphere A and concavity on hemisphere B.

    Args:
        x: Sample point inside the ball, not the origin
        y: Sample label (+1 or -1)
        n_geodesics: Segments drawn in each hemisphere
        seed: Generator seed
        target: Function of omega to probe (see module docstring)
        mu, b, c: Fixed loss parameters
        tol: Slack on every comparison

    Raises:
        DegeneratePoint: x is the origin
    """
    x = x if isinstance(x, PoincarePoint) else PoincarePoint(x)
    if x.norm == 0.0:
        raise DegeneratePoint("Convexity probe needs a sample away from the origin")
    if y not in (1, -1):
        raise ValueError(f"Label must be +1 or -1, got {y}")
    f = _target_fn(target, x.coords, float(y), mu, b, c)
    axis_a = y * x.coords / x.norm

    rng = np.random.default_rng(seed)
    counts = {"convex": 0, "concave": 0, "quasi_convex": 0, "quasi_concave": 0}
    done = {1: 0, -1: 0}
    max_excess = -np.inf

    for side in (1, -1):
        while done[side] < n_geodesics:
            need = n_geodesics - done[side]
            starts = _hemisphere_points(rng, need, side * axis_a)
            ends = _hemisphere_points(rng, need, side * axis_a)
            for u1, u2 in zip(starts, ends):
                try:
                    mid = geodesic_between_sphere_points(SpherePoint(u1), SpherePoint(u2), 0.5)
                except AntipodalError:
                    continue
                fa, fb, fm = f(u1), f(u2), f(mid.u)
                if side == 1:
                    excess = fm - 0.5 * (fa + fb)
                    max_excess = max(max_excess, excess)
                    counts["convex"] += excess > tol
                    counts["quasi_convex"] += fm > max(fa, fb) + tol
                else:
                    counts["concave"] += fm < 0.5 * (fa + fb) - tol
                    counts["quasi_concave"] += fm < min(fa, fb) - tol
                done[side] += 1

    report = ConvexityReport(
        target=target,
        segments_a=done[1],
        segments_b=done[-1],
        convexity_violations=int(counts["convex"]),
        concavity_violations=int(counts["concave"]),
        quasi_convexity_violations=int(counts["quasi_convex"]),
        quasi_concavity_violations=int(counts["quasi_concave"]),
        max_excess=float(max_excess),
    )
    logger.debug(f"Convexity probe ({target}): {report.to_dict()}")
    return report
