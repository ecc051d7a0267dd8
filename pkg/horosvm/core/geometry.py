"""
Poincare ball geometry (curvature -1).

Closed-form primitives used by the classifiers:
- geodesic distance, exponential and logarithm maps
- Busemann function and the Poincare inner product <omega, x>_B
- geodesic rays from the origin
- horospheres: Euclidean form, horospherical projection, point distance

Functions accept either the typed wrappers (PoincarePoint, IdealPoint) or
plain arrays. Array inputs are batched along leading axes, so the loss code
can evaluate a whole dataset in one call.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from ..errors import BallInvariantError, DimensionMismatch, GeometryError

logger = logging.getLogger(__name__)

# Points with norm >= 1 - EPS_BOUNDARY are rejected: the Busemann closed form
# has no precision left there.
EPS_BOUNDARY = 1e-9

# Unit-norm tolerance for ideal points
IDEAL_TOL = 1e-12


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PoincarePoint:
    """A point strictly inside the unit ball."""
    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float)
        if coords.ndim != 1 or coords.size == 0:
            raise ValueError(f"PoincarePoint needs a non-empty vector, got shape {coords.shape}")
        norm = float(np.linalg.norm(coords))
        if not np.isfinite(norm) or norm >= 1.0 - EPS_BOUNDARY:
            raise BallInvariantError(
                f"Point norm {norm!r} is not inside the ball (limit 1 - {EPS_BOUNDARY:g})"
            )
        object.__setattr__(self, "coords", _readonly(coords))

    @classmethod
    def origin(cls, dim: int) -> "PoincarePoint":
        return cls(np.zeros(dim))

    @property
    def dim(self) -> int:
        return int(self.coords.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, PoincarePoint) and np.array_equal(self.coords, other.coords)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class IdealPoint:
    """
    A point on the boundary sphere.

    Directions off the unit sphere by more than IDEAL_TOL are renormalized;
    unit vectors are stored as given, so saved models reload bit-for-bit.
    """
    direction: np.ndarray

    def __post_init__(self):
        direction = np.array(self.direction, dtype=float)
        if direction.ndim != 1 or direction.size == 0:
            raise ValueError(f"IdealPoint needs a non-empty vector, got shape {direction.shape}")
        norm = float(np.linalg.norm(direction))
        if not np.isfinite(norm) or norm == 0.0:
            raise GeometryError("IdealPoint direction must be finite and non-zero")
        if abs(norm - 1.0) > IDEAL_TOL:
            direction = direction / norm
        object.__setattr__(self, "direction", _readonly(direction))

    @property
    def dim(self) -> int:
        return int(self.direction.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealPoint) and np.array_equal(self.direction, other.direction)

    __hash__ = None


@dataclass(frozen=True)
class Horosphere:
    """
    Horosphere pi_{mu, omega, b} = {z : mu <omega, z>_B - b = 0}.

    The level lambda = b / mu is the Poincare inner product shared by all of
    its points; it passes through tanh(lambda / 2) * omega.
    """
    mu: float
    omega: IdealPoint
    b: float

    def __post_init__(self):
        mu = float(self.mu)
        b = float(self.b)
        if not np.isfinite(mu) or mu <= 0.0:
            raise ValueError(f"Horosphere scale mu must be positive, got {self.mu}")
        if not np.isfinite(b) or not np.isfinite(b / mu):
            raise ValueError(f"Horosphere offset b must give a finite level, got b={self.b}")
        if not isinstance(self.omega, IdealPoint):
            object.__setattr__(self, "omega", IdealPoint(self.omega))
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "b", b)

    @property
    def level(self) -> float:
        return self.b / self.mu

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def family(self) -> str:
        """'positive' (b > 0, radius < 1/2), 'negative' (b < 0) or 'origin' (b == 0)."""
        if self.b > 0:
            return "positive"
        if self.b < 0:
            return "negative"
        return "origin"

    @property
    def through_point(self) -> np.ndarray:
        return np.tanh(self.level / 2.0) * self.omega.direction

    def scaled(self, c: float) -> "Horosphere":
        """Same horosphere with (mu, b) -> (c mu, c b)."""
        if c <= 0:
            raise ValueError(f"Scale factor must be positive, got {c}")
        return Horosphere(mu=self.mu * c, omega=self.omega, b=self.b * c)

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "omega": [float(v) for v in self.omega.direction],
            "b": self.b,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Horosphere":
        return cls(mu=data["mu"], omega=IdealPoint(data["omega"]), b=data["b"])


@dataclass(frozen=True, eq=False)
class TangentVector:
    """Tangent vector at a ball point, in ambient (Euclidean) coordinates."""
    base: PoincarePoint
    vec: np.ndarray

    def __post_init__(self):
        vec = np.array(self.vec, dtype=float)
        if vec.shape != (self.base.dim,):
            raise DimensionMismatch(
                f"Tangent vector shape {vec.shape} does not match base dimension {self.base.dim}"
            )
        object.__setattr__(self, "vec", _readonly(vec))


PointLike = Union[PoincarePoint, np.ndarray, Sequence[float]]
DirectionLike = Union[IdealPoint, np.ndarray, Sequence[float]]


def _coords(x: PointLike) -> np.ndarray:
    if isinstance(x, PoincarePoint):
        return x.coords
    return np.asarray(x, dtype=float)


def _direction(omega: DirectionLike) -> np.ndarray:
    if isinstance(omega, IdealPoint):
        return omega.direction
    arr = np.asarray(omega, dtype=float)
    return arr / np.linalg.norm(arr, axis=-1, keepdims=True)


def _out(value):
    """Unwrap 0-d results to float."""
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


def _like(template, coords: np.ndarray):
    """Return a PoincarePoint when the caller passed one, else the raw array."""
    if isinstance(template, PoincarePoint):
        return PoincarePoint(coords)
    return coords


def _sq_norm(x: np.ndarray) -> np.ndarray:
    return np.sum(x * x, axis=-1)


# --- Distances ---

def conformal_factor(x: PointLike):
    """lambda_x = 2 / (1 - |x|^2); the metric at x is lambda_x^2 times Euclidean."""
    return _out(2.0 / (1.0 - _sq_norm(_coords(x))))


def geodesic_distance(x: PointLike, y: PointLike):
    """
    Hyperbolic distance arccosh(1 + 2|x-y|^2 / ((1-|x|^2)(1-|y|^2))).

    Evaluated as 2 asinh(sqrt(s)) with s the fraction above, which is the
    same quantity without the cancellation of arccosh near 1.
    """
    x = _coords(x)
    y = _coords(y)
    s = _sq_norm(x - y) / ((1.0 - _sq_norm(x)) * (1.0 - _sq_norm(y)))
    return _out(2.0 * np.arcsinh(np.sqrt(s)))


def busemann(omega: DirectionLike, x: PointLike):
    """Busemann function b_omega(x) = -log((1 - |x|^2) / |omega - x|^2); b_omega(0) = 0."""
    w = _direction(omega)
    x = _coords(x)
    return _out(np.log(_sq_norm(w - x)) - np.log1p(-_sq_norm(x)))


def poincare_inner(omega: DirectionLike, x: PointLike):
    """<omega, x>_B = log((1 - |x|^2) / |omega - x|^2), the negated Busemann function."""
    return -busemann(omega, x)


def poincare_inner_grad(omega: DirectionLike, x: PointLike) -> np.ndarray:
    """Ambient gradient of <omega, x>_B with respect to omega: -2 (omega - x) / |omega - x|^2."""
    w = _direction(omega)
    x = _coords(x)
    diff = w - x
    return -2.0 * diff / _sq_norm(diff)[..., None]


# --- Rays and horospheres ---

def geodesic_ray(omega: DirectionLike, t: float) -> PoincarePoint:
    """Point at distance t from the origin on the ray toward omega: tanh(t/2) omega."""
    if t < 0:
        raise ValueError(f"Ray parameter must be non-negative, got {t}")
    return PoincarePoint(np.tanh(t / 2.0) * _direction(omega))


def horosphere_euclidean_form(h: Horosphere) -> Tuple[np.ndarray, float]:
    """
    Euclidean sphere carrying the horosphere.

    Returns:
        (center, radius) with center = (1+p)/2 omega, radius = (1-p)/2,
        p = tanh(level / 2)
    """
    p = np.tanh(h.level / 2.0)
    center = 0.5 * (1.0 + p) * h.omega.direction
    radius = 0.5 * (1.0 - p)
    return center, float(radius)


def uniform_directions(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    v = rng.standard_normal((count, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def horosphere_points(h: Horosphere, count: int,
                      seed: Optional[int] = None,
                      max_cos: float = 0.99,
                      rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Sample points on a horosphere through its Euclidean form.

    Args:
        h: Horosphere
        count: Number of points
        seed: Seed for a fresh generator (ignored when ``rng`` is given)
        max_cos: Keep center offsets u with u . omega <= max_cos, away from
                 the tangency point where coordinates lose precision
        rng: Optional generator to draw from

    Returns:
        (count, n) array of points inside the ball
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    center, radius = horosphere_euclidean_form(h)
    w = h.omega.direction
    chosen = []
    have = 0
    while have < count:
        u = uniform_directions(rng, max(2 * (count - have), 8), h.dim)
        u = u[u @ w <= max_cos]
        chosen.append(u)
        have += len(u)
    u = np.concatenate(chosen)[:count]
    return center + radius * u


def horospherical_projection(omega: DirectionLike, x: PointLike):
    """
    Project x along its own horosphere (tangent at omega) onto the ray toward omega.

    Returns tanh(lambda_x / 2) omega with lambda_x = <omega, x>_B.
    """
    w = _direction(omega)
    lam = np.asarray(poincare_inner(w, x))
    return _like(x, np.tanh(lam / 2.0)[..., None] * w)


def point_to_horosphere_distance(x: PointLike, h: Horosphere):
    """Hyperbolic distance from x to h: |mu <omega, x>_B - b| / mu."""
    inner = np.asarray(poincare_inner(h.omega, x))
    return _out(np.abs(h.mu * inner - h.b) / h.mu)


def distance_to_horosphere_bruteforce(x: PointLike, h: Horosphere,
                                      n_samples: int = 4096,
                                      rounds: int = 6,
                                      seed: int = 0) -> float:
    """
    min over z on h of geodesic_distance(x, z), found without the closed form.

    Samples the Euclidean sphere of h densely, then refines the best sample by
    cyclic golden-section searches along great circles of offset directions.
    """
    x = _coords(x)
    center, radius = horosphere_euclidean_form(h)
    dim = h.dim
    if x.shape != (dim,):
        raise DimensionMismatch(f"Point dimension {x.shape} does not match horosphere dim {dim}")

    def distance_at(u: np.ndarray):
        z = center + radius * u
        with np.errstate(divide="ignore", invalid="ignore"):
            d = geodesic_distance(x, z)
        return np.where(np.isfinite(d), d, np.inf)

    rng = np.random.default_rng(seed)
    dirs = uniform_directions(rng, n_samples, dim)
    values = np.asarray(distance_at(dirs))
    best = dirs[int(np.argmin(values))]
    best_value = float(values.min())

    # angular spacing of the sample cloud, generous
    width = 4.0 * np.pi / max(n_samples ** (1.0 / max(dim - 1, 1)), 1.0)
    for _ in range(rounds):
        # orthonormal basis of the tangent space of the unit sphere at `best`
        basis = np.linalg.svd(best[None, :])[2][1:]
        for e in basis:
            def along(t, e=e, u0=best):
                return float(distance_at(np.cos(t) * u0 + np.sin(t) * e))

            res = minimize_scalar(along, bracket=(-width, width), method="golden",
                                  options={"xtol": 1e-12})
            if res.fun < best_value:
                best = np.cos(res.x) * best + np.sin(res.x) * e
                best /= np.linalg.norm(best)
                best_value = float(res.fun)
        width /= 4.0

    return best_value


# --- Exponential and logarithm maps ---

def mobius_add(x: PointLike, y: PointLike) -> np.ndarray:
    """Mobius (gyrovector) addition x (+) y on the unit ball."""
    x = _coords(x)
    y = _coords(y)
    xy = np.sum(x * y, axis=-1, keepdims=True)
    x2 = np.sum(x * x, axis=-1, keepdims=True)
    y2 = np.sum(y * y, axis=-1, keepdims=True)
    num = (1.0 + 2.0 * xy + y2) * x + (1.0 - x2) * y
    den = 1.0 + 2.0 * xy + x2 * y2
    return num / den


def expmap(x: PointLike, v: np.ndarray) -> np.ndarray:
    """Array form of exp_map: x (+) tanh(lambda_x |v| / 2) v / |v|."""
    x = _coords(x)
    v = np.asarray(v, dtype=float)
    v_norm = np.linalg.norm(v, axis=-1, keepdims=True)
    lam = 2.0 / (1.0 - np.sum(x * x, axis=-1, keepdims=True))
    safe = np.where(v_norm > 0.0, v_norm, 1.0)
    step = np.tanh(lam * v_norm / 2.0) * v / safe
    return mobius_add(x, step)


def logmap(x: PointLike, y: PointLike) -> np.ndarray:
    """Array form of log_map: (2 / lambda_x) artanh(|u|) u / |u| with u = (-x) (+) y."""
    x = _coords(x)
    y = _coords(y)
    u = mobius_add(-x, y)
    u_norm = np.linalg.norm(u, axis=-1, keepdims=True)
    lam = 2.0 / (1.0 - np.sum(x * x, axis=-1, keepdims=True))
    safe = np.where(u_norm > 0.0, u_norm, 1.0)
    return (2.0 / lam) * np.arctanh(np.minimum(u_norm, 1.0 - 1e-16)) * u / safe


def exp_map(v: TangentVector) -> PoincarePoint:
    """Exponential map at v.base."""
    return PoincarePoint(expmap(v.base.coords, v.vec))


def log_map(x: PoincarePoint, y: PoincarePoint) -> TangentVector:
    """Logarithm map: tangent vector at x pointing to y with g_B-norm d(x, y)."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"Dimension mismatch: {x.dim} vs {y.dim}")
    return TangentVector(base=x, vec=logmap(x.coords, y.coords))


def tangent_norm(v: TangentVector) -> float:
    """Norm of v under the Poincare metric at its base: lambda_x |v|."""
    return float(conformal_factor(v.base) * np.linalg.norm(v.vec))
