"""Tests for binary horospherical classifiers and their training."""

import numpy as np
import pytest

from conftest import random_ball_points
from horosvm.core.geometry import Horosphere, IdealPoint, point_to_horosphere_distance
from horosvm.core.manifold import ProductPoint
from horosvm.core.optim import OptimConfig
from horosvm.data.dataset import LabeledDataset
from horosvm.data.metrics import evaluate
from horosvm.data.synth import make_cap_dataset
from horosvm.errors import DimensionMismatch, LabelError, SingleClassDataset
from horosvm.model.classifier import (
    HoroClassifier,
    LossKind,
    TrainConfig,
    decision_value,
    functional_margins,
    margin,
    renormalize,
    run_restarts,
    train_binary,
)
from horosvm.model.losses import perceptron_loss


@pytest.fixture
def clf():
    return HoroClassifier(Horosphere(mu=1.0, omega=IdealPoint([1.0, 0.0]), b=1.0))


class TestDecision:
    """Decision values and predictions of a fixed classifier."""

    def test_on_boundary(self, clf):
        assert decision_value(clf, clf.boundary.through_point) == pytest.approx(0.0, abs=1e-12)

    def test_origin_is_negative(self, clf):
        assert clf.decision_value(np.zeros(2)) == pytest.approx(-1.0)
        assert clf.predict(np.zeros(2))[0] == -1

    def test_deep_inside_is_positive(self, clf):
        # <omega, x>_B = log((1 - 0.64) / 0.04) = log 9
        assert clf.decision_value([0.8, 0.0]) == pytest.approx(np.log(9.0) - 1.0)
        np.testing.assert_array_equal(clf.predict([[0.8, 0.0], [-0.5, 0.0]]), [1, -1])

    def test_signed_distance_matches_geometry(self, clf, rng):
        x = random_ball_points(rng, 30, 2)
        np.testing.assert_allclose(np.abs(clf.signed_distance(x)),
                                   point_to_horosphere_distance(x, clf.boundary), rtol=1e-12)

    @pytest.mark.parametrize("c", [1e-3, 1.0, 1e3])
    def test_sign_invariant_under_scaling(self, rng, c):
        h = Horosphere(mu=0.7, omega=IdealPoint([0.3, -0.2, 0.9]), b=0.4)
        x = random_ball_points(rng, 500, 3)
        base = HoroClassifier(h).predict(x)
        np.testing.assert_array_equal(HoroClassifier(h.scaled(c)).predict(x), base)

    def test_dimension_mismatch(self, clf):
        with pytest.raises(DimensionMismatch):
            clf.decision_value([0.1, 0.2, 0.3])


class TestMargin:
    """Geometric margin and the margin-preserving rescaling."""

    def test_single_sample_on_boundary(self):
        p = ProductPoint.from_values(2.0, [0.0, 1.0], 1.0)
        x = p.horosphere.through_point
        assert margin(p, LabeledDataset([x], [1])) == pytest.approx(0.0, abs=1e-12)

    def test_cap_margin_is_at_least_gap(self, cap_data):
        p = ProductPoint.from_values(1.0, [1.0, 0.0], 1.0)
        assert margin(p, cap_data) >= 0.3 - 1e-9
        assert HoroClassifier.from_point(p).margin(cap_data) == pytest.approx(margin(p, cap_data))

    def test_margin_from_point_distances(self, cap_data):
        p = ProductPoint.from_values(2.5, [0.8, 0.6], 1.0)
        clf = HoroClassifier.from_point(p)
        y = cap_data.labels
        correct = np.where(clf.predict(cap_data.points) == y, 1.0, -1.0)
        signed = correct * point_to_horosphere_distance(cap_data.points, p.horosphere)
        assert margin(p, cap_data) == pytest.approx(float(np.min(signed)), abs=1e-12)

    def test_renormalize_preserves_margin(self, cap_data):
        p = ProductPoint.from_values(3.7, [1.0, 0.0], 3.7)
        q = renormalize(p, cap_data)
        assert np.min(functional_margins(q, cap_data)) == pytest.approx(1.0, abs=1e-12)
        assert margin(q, cap_data) == pytest.approx(margin(p, cap_data), abs=1e-12)
        np.testing.assert_array_equal(HoroClassifier.from_point(q).predict(cap_data.points),
                                      HoroClassifier.from_point(p).predict(cap_data.points))

    def test_renormalize_needs_separation(self, cap_data):
        p = ProductPoint.from_values(1.0, [-1.0, 0.0], 1.0)
        with pytest.raises(ValueError):
            renormalize(p, cap_data)


class TestTrainConfig:
    @pytest.mark.parametrize("kwargs", [
        {"c": 0.0}, {"restarts": 0}, {"workers": 0}, {"downsample_ratio": -1.0},
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            TrainConfig(**kwargs)


class TestTrainBinary:
    """Training on separable and degenerate inputs."""

    def test_single_label(self):
        data = LabeledDataset([[0.1, 0.0], [0.2, 0.1]], [1, 1])
        with pytest.raises(SingleClassDataset):
            train_binary(data)

    def test_non_binary_labels(self):
        data = LabeledDataset([[0.1, 0.0], [0.2, 0.1]], [0, 1])
        with pytest.raises(LabelError):
            train_binary(data)

    def test_separates_cap_data(self, cap_data, fast_cfg):
        clf, report = train_binary(cap_data, fast_cfg)
        np.testing.assert_array_equal(clf.predict(cap_data.points), cap_data.labels)
        assert clf.boundary.b > 0.0
        assert report.iters_used > 0

    def test_perceptron_separates_cap_data(self, cap_data):
        cfg = TrainConfig(restarts=3, optim=OptimConfig(max_iters=500))
        clf, report = train_binary(cap_data, cfg, LossKind.PERCEPTRON)
        assert report.final_loss == pytest.approx(0.0, abs=1e-12)
        # the perceptron keeps mu at its starting value
        assert clf.boundary.mu == pytest.approx(1.0)
        np.testing.assert_array_equal(clf.predict(cap_data.points), cap_data.labels)

    def test_two_point_margin(self):
        """One sample per class on a common ray: the widest margin is half the level gap."""
        w = np.array([0.6, 0.8])
        data = LabeledDataset([np.tanh(1.0) * w, np.tanh(0.25) * w], [1, -1])
        cfg = TrainConfig(c=100.0, restarts=3, optim=OptimConfig(max_iters=3000))
        clf, _ = train_binary(data, cfg)
        assert clf.margin(data) == pytest.approx(0.75, abs=2e-2)
        np.testing.assert_allclose(clf.boundary.omega.direction, w, atol=5e-2)

        perceptron, _ = train_binary(data, cfg, LossKind.PERCEPTRON)
        p = ProductPoint.from_values(perceptron.boundary.mu, perceptron.boundary.omega.direction,
                                     perceptron.boundary.b)
        q = renormalize(p, data)
        assert np.min(functional_margins(q, data)) == pytest.approx(1.0)
        assert 0.0 < margin(q, data) <= 0.75 + 1e-6

    def test_origin_sample_is_perturbed(self, caplog):
        data = LabeledDataset([[0.0, 0.0], [0.9, 0.0], [0.85, 0.1]], [-1, 1, 1])
        cfg = TrainConfig(restarts=1, optim=OptimConfig(max_iters=50))
        train_binary(data, cfg)
        assert "origin point" in caplog.text

    def test_iteration_cap_is_reported(self, cap_data, caplog):
        cfg = TrainConfig(c=100.0, restarts=1, optim=OptimConfig(max_iters=3))
        with caplog.at_level("INFO", logger="horosvm"):
            _, report = train_binary(cap_data, cfg)
        assert report.iters_used == 3
        assert not report.converged
        assert report.stop_reason == "max_iters"
        assert "converged=False, stop=max_iters" in caplog.text

    def test_restarts_are_reproducible(self, cap_data, fast_cfg):
        first = run_restarts(cap_data, fast_cfg)
        second = run_restarts(cap_data, fast_cfg)
        assert len(first) == fast_cfg.restarts
        for (p1, r1), (p2, r2) in zip(first, second):
            np.testing.assert_array_equal(p1.omega.u, p2.omega.u)
            assert r1.final_loss == r2.final_loss

    def test_downsampling(self, fast_cfg):
        data = make_cap_dataset(omega=[0.0, 1.0], per_class=40, seed=4)
        keep = np.concatenate([np.arange(40), np.arange(40, 80)[:10]])
        skewed = data.subset(keep)
        cfg = TrainConfig(c=10.0, restarts=1, downsample_ratio=1.0,
                          optim=OptimConfig(max_iters=300))
        clf, _ = train_binary(skewed, cfg)
        assert clf.dim == 2


@pytest.mark.slow
class TestSeparability:
    """Both objectives separate horosphere-separable data."""

    @pytest.mark.parametrize("seed", range(10))
    def test_perceptron_reaches_zero_loss(self, seed):
        data = make_cap_dataset(per_class=100, seed=seed)
        clf, report = train_binary(data, TrainConfig(seed=seed), LossKind.PERCEPTRON)
        assert report.final_loss == pytest.approx(0.0, abs=1e-12)
        p = ProductPoint.from_values(clf.boundary.mu, clf.boundary.omega.direction,
                                     clf.boundary.b)
        assert perceptron_loss(p, data)[0] == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("seed", range(10))
    def test_horosvm_reaches_perfect_f1(self, seed):
        data = make_cap_dataset(per_class=100, seed=seed)
        clf, _ = train_binary(data, TrainConfig(c=10.0, seed=seed))
        report = evaluate(clf.predict(data.points), data.labels)
        assert report.macro_f1 == 1.0

    def test_restarts_in_common_hemisphere_agree(self):
        omega = np.array([1.0, 2.0, -1.0, 0.5, 0.0])
        omega /= np.linalg.norm(omega)
        data = make_cap_dataset(omega=omega, gap=0.3, per_class=100, seed=11)
        cfg = TrainConfig(c=10.0, restarts=5, optim=OptimConfig(max_iters=5000))
        results = run_restarts(data, cfg)
        losses = [r.final_loss for p, r in results if p.omega.u @ omega > 0.0]
        assert losses
        assert max(losses) == pytest.approx(min(losses), rel=1e-4)
