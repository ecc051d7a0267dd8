"""Tests for the perceptron and HoroSVM objectives."""

import numpy as np
import pytest

from conftest import random_ball_points, random_directions
from horosvm.core.geometry import poincare_inner
from horosvm.core.manifold import ProductPoint
from horosvm.data.dataset import LabeledDataset
from horosvm.errors import LabelError
from horosvm.model.losses import horosvm_loss, perceptron_loss, scores

FD_STEP = 1e-6

# Samples whose hinge argument is closer than this to zero are treated as kinks
KINK_GAP = 1e-4


def _loss(kind, p, dataset, c):
    if kind == "perceptron":
        return perceptron_loss(p, dataset)
    return horosvm_loss(p, dataset, c)


def _finite_differences(kind, mu, omega, b, dataset, c):
    """Central differences in (mu, omega components, b); omega is renormalized by the point."""
    def f(m, w, bb):
        return _loss(kind, ProductPoint.from_values(m, w, bb), dataset, c)[0]

    h = FD_STEP
    g_mu = (f(mu + h, omega, b) - f(mu - h, omega, b)) / (2 * h)
    g_b = (f(mu, omega, b + h) - f(mu, omega, b - h)) / (2 * h)
    g_omega = np.array([(f(mu, omega + h * e, b) - f(mu, omega - h * e, b)) / (2 * h)
                        for e in np.eye(omega.size)])
    return np.concatenate(([g_mu], g_omega, [g_b]))


def _away_from_kinks(kind, p, dataset) -> bool:
    s = dataset.labels * scores(p, dataset.points)
    edge = s if kind == "perceptron" else 1.0 - s
    return bool(np.all(np.abs(edge) > KINK_GAP))


class TestKnownValues:
    def test_horosvm_at_origin(self):
        p = ProductPoint.from_values(1.0, [1.0, 0.0], 1.0)
        negative = LabeledDataset([[0.0, 0.0]], [-1])
        positive = LabeledDataset([[0.0, 0.0]], [1])
        # score at the origin is -b = -1
        assert horosvm_loss(p, negative, c=3.0)[0] == pytest.approx(0.5)
        assert horosvm_loss(p, positive, c=3.0)[0] == pytest.approx(0.5 + 3.0 * 2.0)

    def test_hinge_inactive_gives_regularizer(self):
        w = np.array([1.0, 0.0])
        dataset = LabeledDataset([np.tanh(2.0) * w, np.tanh(-1.0) * w], [1, -1])
        p = ProductPoint.from_values(2.0, w, 1.0)
        loss, grad = horosvm_loss(p, dataset, c=10.0)
        assert loss == 2.0
        assert grad.g_mu == pytest.approx(2.0)
        assert grad.g_b == 0.0
        np.testing.assert_array_equal(grad.g_omega, 0.0)

    def test_perceptron_zero_when_separated(self, cap_data):
        p = ProductPoint.from_values(1.0, [1.0, 0.0], 1.0)
        loss, grad = perceptron_loss(p, cap_data)
        assert loss == 0.0
        assert (grad.g_mu, grad.g_b) == (0.0, 0.0)

    def test_perceptron_single_misclassified_positive(self):
        w = np.array([0.0, 1.0])
        x = np.tanh(0.25) * w
        p = ProductPoint.from_values(1.5, w, 2.0)
        loss, _ = perceptron_loss(p, LabeledDataset([x], [1]))
        assert loss == pytest.approx(2.0 - 1.5 * poincare_inner(w, x))
        assert loss == pytest.approx(1.25)

    def test_small_c_favors_small_mu(self, cap_data):
        big = horosvm_loss(ProductPoint.from_values(5.0, [1.0, 0.0], 1.0), cap_data, c=1e-9)[0]
        small = horosvm_loss(ProductPoint.from_values(1e-3, [1.0, 0.0], 1.0), cap_data,
                             c=1e-9)[0]
        assert small < 1e-5 < big


class TestValidation:
    def test_rejects_non_binary_labels(self):
        p = ProductPoint.from_values(1.0, [1.0, 0.0], 1.0)
        with pytest.raises(LabelError):
            perceptron_loss(p, LabeledDataset([[0.1, 0.2]], [2]))

    def test_rejects_non_positive_c(self, cap_data):
        p = ProductPoint.from_values(1.0, [1.0, 0.0], 1.0)
        with pytest.raises(ValueError):
            horosvm_loss(p, cap_data, c=0.0)


@pytest.mark.parametrize("kind", ["perceptron", "horosvm"])
@pytest.mark.parametrize("dim", [2, 5, 10])
def test_gradient_matches_finite_differences(rng, kind, dim):
    """Analytic gradients at 100 parameter points away from the hinge kinks."""
    c = 1.5
    checked = 0
    while checked < 100:
        dataset = LabeledDataset(random_ball_points(rng, 12, dim),
                                 rng.choice([-1, 1], size=12))
        mu, b = rng.uniform(0.3, 3.0, size=2)
        omega = random_directions(rng, 1, dim)[0]
        p = ProductPoint.from_values(mu, omega, b)
        if not _away_from_kinks(kind, p, dataset):
            continue

        _, grad = _loss(kind, p, dataset, c)
        g_omega = grad.g_omega - (omega @ grad.g_omega) * omega
        analytic = np.concatenate(([grad.g_mu], g_omega, [grad.g_b]))
        numeric = _finite_differences(kind, mu, omega, b, dataset, c)

        error = np.linalg.norm(analytic - numeric)
        assert error <= 1e-5 * np.linalg.norm(numeric) + 1e-9
        checked += 1
