"""
Riemannian first-order solvers on R+ x S^{n-1} x R+.

Gradient descent and Polak-Ribiere+ conjugate gradient, both with an Armijo
backtracking line search. The objective returns (loss, AmbientGradient); the
solver turns ambient gradients into Riemannian ones with project_tangent.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..errors import NonFiniteObjective
from .manifold import (
    AmbientGradient,
    ProductPoint,
    ProductTangent,
    inner,
    norm,
    project_tangent,
    retract,
    transport,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITERS = 2000
DEFAULT_GRAD_TOL = 1e-7
DEFAULT_STEP_INIT = 1.0
DEFAULT_ARMIJO_C = 1e-4
DEFAULT_BACKTRACK_FACTOR = 0.5
DEFAULT_MAX_BACKTRACKS = 60

# Initial trial step grows by this factor over the step implied by the last decrease
LINE_SEARCH_OPTIMISM = 2.0

Objective = Callable[[ProductPoint], Tuple[float, AmbientGradient]]


class OptimMethod(Enum):
    """Available solvers"""
    GD = "gd"
    CG = "cg"


@dataclass
class OptimConfig:
    """Solver hyperparameters."""
    method: OptimMethod = OptimMethod.CG
    max_iters: int = DEFAULT_MAX_ITERS
    grad_tol: float = DEFAULT_GRAD_TOL
    step_init: float = DEFAULT_STEP_INIT
    armijo_c: float = DEFAULT_ARMIJO_C
    backtrack_factor: float = DEFAULT_BACKTRACK_FACTOR
    cg_restart_period: Optional[int] = None  # None = sphere dimension n
    max_backtracks: int = DEFAULT_MAX_BACKTRACKS

    def __post_init__(self):
        if isinstance(self.method, str):
            self.method = OptimMethod(self.method.lower())
        if self.max_iters < 0:
            raise ValueError(f"max_iters must be >= 0, got {self.max_iters}")
        if self.grad_tol < 0:
            raise ValueError(f"grad_tol must be >= 0, got {self.grad_tol}")
        if self.step_init <= 0:
            raise ValueError(f"step_init must be > 0, got {self.step_init}")
        if not 0.0 < self.armijo_c < 1.0:
            raise ValueError(f"armijo_c must be in (0, 1), got {self.armijo_c}")
        if not 0.0 < self.backtrack_factor < 1.0:
            raise ValueError(f"backtrack_factor must be in (0, 1), got {self.backtrack_factor}")
        if self.cg_restart_period is not None and self.cg_restart_period < 1:
            raise ValueError(f"cg_restart_period must be >= 1, got {self.cg_restart_period}")
        if self.max_backtracks < 1:
            raise ValueError(f"max_backtracks must be >= 1, got {self.max_backtracks}")

    def to_dict(self) -> dict:
        return {
            'method': self.method.value,
            'max_iters': self.max_iters,
            'grad_tol': self.grad_tol,
            'step_init': self.step_init,
            'armijo_c': self.armijo_c,
            'backtrack_factor': self.backtrack_factor,
            'cg_restart_period': self.cg_restart_period,
            'max_backtracks': self.max_backtracks,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OptimConfig":
        return cls(
            method=data.get('method', OptimMethod.CG.value),
            max_iters=int(data.get('max_iters', DEFAULT_MAX_ITERS)),
            grad_tol=float(data.get('grad_tol', DEFAULT_GRAD_TOL)),
            step_init=float(data.get('step_init', DEFAULT_STEP_INIT)),
            armijo_c=float(data.get('armijo_c', DEFAULT_ARMIJO_C)),
            backtrack_factor=float(data.get('backtrack_factor', DEFAULT_BACKTRACK_FACTOR)),
            cg_restart_period=data.get('cg_restart_period'),
            max_backtracks=int(data.get('max_backtracks', DEFAULT_MAX_BACKTRACKS)),
        )


@dataclass
class OptimizerReport:
    """Convergence diagnostics of one solver run."""
    iters_used: int
    final_loss: float
    final_grad_norm: float
    converged: bool
    loss_trace: List[float] = field(default_factory=list)
    stop_reason: str = "max_iters"  # "grad_tol", "max_iters" or "line_search"


class RiemannianSolver:
    """
    Single-threaded solver instance. Independent instances may run concurrently;
    line-search state is per instance.
    """

    def __init__(self, cfg: Optional[OptimConfig] = None):
        self.cfg = cfg or OptimConfig()
        self._prev_f0: Optional[float] = None

    @staticmethod
    def _evaluate(objective: Objective, x: ProductPoint) -> Tuple[float, AmbientGradient]:
        loss, grad = objective(x)
        loss = float(loss)
        if not np.isfinite(loss) or not grad.is_finite():
            raise NonFiniteObjective(
                f"Objective is not finite at mu={x.mu.value:.6g}, b={x.b.value:.6g} "
                f"(loss={loss})"
            )
        return loss, grad

    def _line_search(self, objective: Objective, x: ProductPoint, direction: ProductTangent,
                     f0: float, slope: float):
        """
        Backtracking line search with Armijo sufficient decrease.

        Returns:
            (next point, loss, ambient gradient) or None when no step in
            max_backtracks contractions decreases the loss enough
        """
        cfg = self.cfg
        d_norm = norm(x, direction)

        if self._prev_f0 is not None:
            # Pick initial step size based on where we were last time
            alpha = LINE_SEARCH_OPTIMISM * 2.0 * (f0 - self._prev_f0) / slope
        else:
            alpha = cfg.step_init / d_norm
        if not np.isfinite(alpha) or alpha <= 0.0:
            alpha = cfg.step_init / d_norm

        for _ in range(cfg.max_backtracks):
            try:
                candidate = retract(x, direction, alpha)
            except ValueError:
                # log-coordinate overflow for an absurd trial step
                candidate = None
            if candidate is not None:
                f_new, g_new = objective(candidate)
                if np.isfinite(f_new) and f_new <= f0 + cfg.armijo_c * alpha * slope:
                    self._prev_f0 = f0
                    return candidate, float(f_new), g_new
            alpha *= cfg.backtrack_factor

        return None

    def minimize(self, objective: Objective,
                 start: ProductPoint) -> Tuple[ProductPoint, OptimizerReport]:
        """
        Minimize ``objective`` starting from ``start``.

        Returns:
            (final point, report). The final point is the last accepted iterate,
            which is also the best one since every step decreases the loss.

        Raises:
            NonFiniteObjective: loss or gradient is NaN/Inf at an accepted iterate
        """
        cfg = self.cfg
        self._prev_f0 = None
        restart_period = cfg.cg_restart_period or max(start.dim, 1)

        x = start
        f, g_amb = self._evaluate(objective, x)
        grad = project_tangent(x, g_amb)
        gnorm = norm(x, grad)
        trace = [f]

        if gnorm <= cfg.grad_tol:
            return x, OptimizerReport(0, f, gnorm, True, trace, "grad_tol")

        direction = -grad
        steepest = True
        since_restart = 0
        iters = 0
        stop_reason = "max_iters"

        while iters < cfg.max_iters:
            slope = inner(x, grad, direction)
            if slope >= 0.0:
                direction = -grad
                slope = -gnorm ** 2
                steepest = True
                since_restart = 0

            accepted = self._line_search(objective, x, direction, f, slope)
            if accepted is None:
                if steepest:
                    stop_reason = "line_search"
                    logger.debug(f"Line search failed at iteration {iters}, loss={f:.10g}")
                    break
                # CG direction failed; retry with steepest descent
                direction = -grad
                steepest = True
                since_restart = 0
                self._prev_f0 = None
                continue

            x_new, f_new, g_new_amb = accepted
            if not g_new_amb.is_finite():
                raise NonFiniteObjective(f"Gradient is not finite at iteration {iters + 1}")
            grad_new = project_tangent(x_new, g_new_amb)
            gnorm_new = norm(x_new, grad_new)
            iters += 1
            trace.append(f_new)

            if cfg.method is OptimMethod.CG:
                since_restart += 1
                transported = transport(x, x_new, direction)
                if since_restart >= restart_period:
                    beta = 0.0
                else:
                    prev_grad = transport(x, x_new, grad)
                    beta = max(0.0, inner(x_new, grad_new, grad_new - prev_grad) / gnorm ** 2)
                if beta == 0.0:
                    since_restart = 0
                direction = -grad_new + beta * transported
                steepest = beta == 0.0
            else:
                direction = -grad_new
                steepest = True

            x, f, grad, gnorm = x_new, f_new, grad_new, gnorm_new
            if gnorm <= cfg.grad_tol:
                stop_reason = "grad_tol"
                break

        converged = stop_reason == "grad_tol"
        logger.debug(f"{cfg.method.value} stopped after {iters} iterations ({stop_reason}): "
                     f"loss={f:.10g}, |grad|={gnorm:.3g}")
        return x, OptimizerReport(iters, f, gnorm, converged, trace, stop_reason)


def minimize(objective: Objective, start: ProductPoint,
             cfg: Optional[OptimConfig] = None) -> Tuple[ProductPoint, OptimizerReport]:
    """Run a fresh RiemannianSolver; see RiemannianSolver.minimize."""
    return RiemannianSolver(cfg).minimize(objective, start)
