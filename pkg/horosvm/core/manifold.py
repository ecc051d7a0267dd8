"""
Riemannian structure of the classifier parameter space R+ x S^{n-1} x R+.

Positive factors (mu, b) are stored in log-coordinates, so positivity is
structural and their retraction is exact. The sphere factor (omega) uses the
normalization retraction and projection-based vector transport.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import AntipodalError, DimensionMismatch
from .geometry import Horosphere, IdealPoint

# Angles within this distance of pi count as antipodal
ANTIPODAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """Unit vector on S^{n-1} (normalized on construction)."""
    u: np.ndarray

    def __post_init__(self):
        u = np.array(self.u, dtype=float)
        norm = float(np.linalg.norm(u))
        if u.ndim != 1 or not np.isfinite(norm) or norm == 0.0:
            raise ValueError("SpherePoint needs a finite non-zero vector")
        u = u / norm
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @property
    def dim(self) -> int:
        return int(self.u.size)


@dataclass(frozen=True)
class PositiveScalar:
    """Positive real stored by its logarithm."""
    log_value: float

    def __post_init__(self):
        if not np.isfinite(self.log_value):
            raise ValueError(f"PositiveScalar log-coordinate must be finite, got {self.log_value}")
        object.__setattr__(self, "log_value", float(self.log_value))

    @classmethod
    def from_value(cls, value: float) -> "PositiveScalar":
        if not value > 0:
            raise ValueError(f"PositiveScalar value must be > 0, got {value}")
        return cls(float(np.log(value)))

    @property
    def value(self) -> float:
        return float(np.exp(self.log_value))


@dataclass(frozen=True, eq=False)
class ProductPoint:
    """A point (mu, omega, b) of R+ x S^{n-1} x R+."""
    mu: PositiveScalar
    omega: SpherePoint
    b: PositiveScalar

    @classmethod
    def from_values(cls, mu: float, omega, b: float) -> "ProductPoint":
        return cls(
            mu=PositiveScalar.from_value(mu),
            omega=SpherePoint(omega),
            b=PositiveScalar.from_value(b),
        )

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def horosphere(self) -> Horosphere:
        return Horosphere(mu=self.mu.value, omega=IdealPoint(self.omega.u), b=self.b.value)

    def ambient(self) -> np.ndarray:
        """Flatten to (mu, omega..., b) in ambient coordinates."""
        return np.concatenate(([self.mu.value], self.omega.u, [self.b.value]))


@dataclass(frozen=True, eq=False)
class AmbientGradient:
    """Euclidean partial derivatives of an objective with respect to (mu, omega, b)."""
    g_mu: float
    g_omega: np.ndarray
    g_b: float

    def __post_init__(self):
        object.__setattr__(self, "g_mu", float(self.g_mu))
        object.__setattr__(self, "g_omega", np.asarray(self.g_omega, dtype=float))
        object.__setattr__(self, "g_b", float(self.g_b))

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.g_mu) and np.isfinite(self.g_b)
                    and np.all(np.isfinite(self.g_omega)))


@dataclass(frozen=True, eq=False)
class ProductTangent:
    """Tangent vector: log-coordinate rates for mu and b, sphere tangent for omega."""
    d_mu: float
    d_omega: np.ndarray
    d_b: float

    def __post_init__(self):
        object.__setattr__(self, "d_mu", float(self.d_mu))
        object.__setattr__(self, "d_omega", np.asarray(self.d_omega, dtype=float))
        object.__setattr__(self, "d_b", float(self.d_b))

    @classmethod
    def zeros(cls, dim: int) -> "ProductTangent":
        return cls(0.0, np.zeros(dim), 0.0)

    def __add__(self, other: "ProductTangent") -> "ProductTangent":
        return ProductTangent(self.d_mu + other.d_mu, self.d_omega + other.d_omega,
                              self.d_b + other.d_b)

    def __sub__(self, other: "ProductTangent") -> "ProductTangent":
        return self + (-other)

    def __mul__(self, c: float) -> "ProductTangent":
        return ProductTangent(c * self.d_mu, c * self.d_omega, c * self.d_b)

    __rmul__ = __mul__

    def __neg__(self) -> "ProductTangent":
        return self * -1.0


def _check_dim(p: ProductPoint, vec: np.ndarray):
    if vec.shape != (p.dim,):
        raise DimensionMismatch(f"Sphere component shape {vec.shape} does not match dim {p.dim}")


def project_tangent(p: ProductPoint,
                    g: Union[AmbientGradient, ProductTangent]) -> ProductTangent:
    """
    Riemannian gradient / tangent projection at p.

    An AmbientGradient is chain-ruled into log-coordinates (d = value * g) and
    its sphere part projected onto omega's tangent space. A ProductTangent is
    already in log-coordinates; only its sphere part is re-projected, so the
    operation is idempotent.
    """
    w = p.omega.u
    if isinstance(g, AmbientGradient):
        _check_dim(p, g.g_omega)
        return ProductTangent(
            d_mu=p.mu.value * g.g_mu,
            d_omega=g.g_omega - (w @ g.g_omega) * w,
            d_b=p.b.value * g.g_b,
        )
    _check_dim(p, g.d_omega)
    return ProductTangent(g.d_mu, g.d_omega - (w @ g.d_omega) * w, g.d_b)


def retract(p: ProductPoint, v: ProductTangent, step: float) -> ProductPoint:
    """Move from p along v: normalize(omega + step d_omega); value * exp(step d) for mu, b."""
    if step == 0.0:
        return p
    return ProductPoint(
        mu=PositiveScalar(p.mu.log_value + step * v.d_mu),
        omega=SpherePoint(p.omega.u + step * v.d_omega),
        b=PositiveScalar(p.b.log_value + step * v.d_b),
    )


def inner(p: ProductPoint, v1: ProductTangent, v2: ProductTangent) -> float:
    """Product metric: Euclidean on the sphere tangent and in log-coordinates."""
    return float(v1.d_mu * v2.d_mu + v1.d_omega @ v2.d_omega + v1.d_b * v2.d_b)


def norm(p: ProductPoint, v: ProductTangent) -> float:
    return float(np.sqrt(max(inner(p, v, v), 0.0)))


def transport(p_from: ProductPoint, p_to: ProductPoint, v: ProductTangent) -> ProductTangent:
    """Vector transport by projection onto the tangent space at p_to."""
    w = p_to.omega.u
    return ProductTangent(v.d_mu, v.d_omega - (w @ v.d_omega) * w, v.d_b)


def geodesic_between_sphere_points(u1: SpherePoint, u2: SpherePoint, t: float) -> SpherePoint:
    """
    Great-circle interpolation (slerp) from u1 (t = 0) to u2 (t = 1).

    Raises:
        AntipodalError: if the angle between u1 and u2 is within 1e-8 of pi
    """
    if t == 0.0:
        return u1
    if t == 1.0:
        return u2
    theta = float(np.arccos(np.clip(u1.u @ u2.u, -1.0, 1.0)))
    if np.pi - theta < ANTIPODAL_TOL:
        raise AntipodalError("Sphere geodesic between antipodal points is not unique")
    if theta < 1e-12:
        return u1
    s = np.sin(theta)
    return SpherePoint((np.sin((1.0 - t) * theta) * u1.u + np.sin(t * theta) * u2.u) / s)
