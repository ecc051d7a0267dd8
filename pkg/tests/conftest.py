"""Shared fixtures for the horosvm test suite."""

from pathlib import Path

import numpy as np
import pytest

from horosvm.core.optim import OptimConfig
from horosvm.data.synth import make_cap_dataset
from horosvm.model.classifier import TrainConfig

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def repo_root() -> Path:
    return REPO_ROOT


@pytest.fixture
def demo_csv() -> Path:
    """Bundled 100-point, 3-class dataset."""
    return REPO_ROOT / "data" / "multiclass_demo.csv"


@pytest.fixture
def fast_cfg() -> TrainConfig:
    """Few restarts and a short iteration cap, for tests that only need a trained model."""
    return TrainConfig(c=10.0, restarts=2, optim=OptimConfig(max_iters=300))


@pytest.fixture
def cap_data():
    """Small horosphere-separable set tangent at (1, 0), level 1, gap 0.3."""
    return make_cap_dataset(omega=[1.0, 0.0], level=1.0, gap=0.3, per_class=30, seed=1)


def random_ball_points(rng: np.random.Generator, count: int, dim: int,
                       max_norm: float = 0.9) -> np.ndarray:
    """Points with uniform direction and norm uniform in (0.05, max_norm)."""
    v = rng.standard_normal((count, dim))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v * rng.uniform(0.05, max_norm, size=(count, 1))


def random_directions(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    v = rng.standard_normal((count, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
