"""Core components: ball geometry, parameter manifold, Riemannian solvers."""

from .geometry import (
    EPS_BOUNDARY,
    PoincarePoint,
    IdealPoint,
    Horosphere,
    TangentVector,
    geodesic_distance,
    busemann,
    poincare_inner,
    geodesic_ray,
    horosphere_euclidean_form,
    horospherical_projection,
    point_to_horosphere_distance,
    exp_map,
    log_map,
)
from .manifold import (
    SpherePoint,
    PositiveScalar,
    ProductPoint,
    ProductTangent,
    AmbientGradient,
    project_tangent,
    retract,
    inner,
    transport,
    geodesic_between_sphere_points,
)
from .optim import OptimMethod, OptimConfig, OptimizerReport, RiemannianSolver, minimize

__all__ = [
    "EPS_BOUNDARY",
    "PoincarePoint",
    "IdealPoint",
    "Horosphere",
    "TangentVector",
    "geodesic_distance",
    "busemann",
    "poincare_inner",
    "geodesic_ray",
    "horosphere_euclidean_form",
    "horospherical_projection",
    "point_to_horosphere_distance",
    "exp_map",
    "log_map",
    "SpherePoint",
    "PositiveScalar",
    "ProductPoint",
    "ProductTangent",
    "AmbientGradient",
    "project_tangent",
    "retract",
    "inner",
    "transport",
    "geodesic_between_sphere_points",
    "OptimMethod",
    "OptimConfig",
    "OptimizerReport",
    "RiemannianSolver",
    "minimize",
]
