"""Tests for cross-validation and the label-noise benchmark."""

import numpy as np
import pytest
from scipy import stats

from horosvm import experiments
from horosvm.core.optim import OptimConfig
from horosvm.data.io import read_dataset
from horosvm.experiments import (
    DEFAULT_ETAS,
    CVRow,
    cross_validate,
    noise_benchmark,
    select_c,
)
from horosvm.model.classifier import HoroClassifier, LossKind, TrainConfig, train_binary


@pytest.fixture
def quick_cfg():
    return TrainConfig(restarts=1, optim=OptimConfig(max_iters=150))


class TestSelectC:
    def test_highest_mean(self):
        rows = [CVRow(1.0, 0.7, 0.0), CVRow(5.0, 0.9, 0.0), CVRow(10.0, 0.8, 0.0)]
        assert select_c(rows) == 5.0

    def test_tie_goes_to_smaller_c(self):
        rows = [CVRow(10.0, 0.9, 0.0), CVRow(1.0, 0.9, 0.1)]
        assert select_c(rows) == 1.0


class TestCrossValidate:
    def test_demo_file(self, demo_csv, quick_cfg):
        data = read_dataset(demo_csv)
        result = cross_validate(data, c_grid=[1.0, 5.0, 10.0], folds=5, seed=0, cfg=quick_cfg)
        assert [row.c for row in result.rows] == [1.0, 5.0, 10.0]
        assert all(len(row.fold_f1) == 5 for row in result.rows)
        assert all(0.0 <= row.mean_f1 <= 1.0 for row in result.rows)
        assert result.best_c in (1.0, 5.0, 10.0)

        text = result.to_text()
        assert text.splitlines()[0].startswith("c = 1: macro_f1 = ")
        assert text.splitlines()[-1] == f"best_c = {result.best_c:g}"

    def test_deterministic_per_seed(self, demo_csv, quick_cfg):
        data = read_dataset(demo_csv)
        a = cross_validate(data, c_grid=[1.0, 10.0], folds=3, seed=4, cfg=quick_cfg)
        b = cross_validate(data, c_grid=[1.0, 10.0], folds=3, seed=4,
                           cfg=TrainConfig(restarts=1, optim=quick_cfg.optim, workers=4))
        assert a.to_text() == b.to_text()

    def test_binary_data(self, cap_data, quick_cfg):
        result = cross_validate(cap_data, c_grid=[10.0], folds=3, cfg=quick_cfg)
        assert result.best_c == 10.0

    def test_empty_grid(self, cap_data):
        with pytest.raises(ValueError):
            cross_validate(cap_data, c_grid=[])

    @pytest.mark.slow
    def test_default_protocol(self, demo_csv):
        data = read_dataset(demo_csv)
        result = cross_validate(data)
        assert result.rows[0].mean_f1 >= 0.9


class TestNoiseBenchmark:
    def test_small_run(self, quick_cfg):
        rows = noise_benchmark(n_datasets=2, etas=[0.0, 0.2], seed=3, cfg=quick_cfg,
                               per_class=20)
        assert [row.eta for row in rows] == [0.0, 0.2]
        for row in rows:
            for value in row.to_dict().values():
                assert 0.0 <= value <= 1.0

    def test_replicas_are_reproducible(self, quick_cfg):
        kwargs = dict(n_datasets=2, etas=[0.1], seed=8, per_class=15)
        a = noise_benchmark(cfg=quick_cfg, **kwargs)
        b = noise_benchmark(cfg=TrainConfig(restarts=1, optim=quick_cfg.optim, workers=2),
                            **kwargs)
        assert a[0].to_dict() == b[0].to_dict()

    def test_trains_one_binary_classifier_per_level(self, monkeypatch, quick_cfg):
        trained = []

        def recording(dataset, cfg=None, loss_kind=LossKind.HOROSVM):
            clf, report = train_binary(dataset, cfg, loss_kind)
            trained.append((set(dataset.classes), clf))
            return clf, report

        monkeypatch.setattr(experiments, "train_binary", recording)
        noise_benchmark(n_datasets=2, etas=[0.0, 0.2, 0.4], seed=1, cfg=quick_cfg,
                        per_class=15)
        assert len(trained) == 2 * 3
        for classes, clf in trained:
            assert classes == {-1, 1}
            assert isinstance(clf, HoroClassifier)

    def test_invalid(self):
        with pytest.raises(ValueError):
            noise_benchmark(n_datasets=0)
        with pytest.raises(ValueError):
            noise_benchmark(etas=[])

    @pytest.mark.slow
    def test_reduced_scale_protocol(self):
        """20 Gaussian-mixture replicas, 100 + 100 training samples each."""
        cfg = TrainConfig(restarts=2, workers=4, optim=OptimConfig(max_iters=500))
        rows = noise_benchmark(n_datasets=20, etas=DEFAULT_ETAS, seed=0, cfg=cfg)
        by_eta = {row.eta: row for row in rows}

        assert by_eta[0.0].test_f1_mean >= 0.90
        assert abs(by_eta[0.3].test_f1_mean - by_eta[0.0].test_f1_mean) <= 0.08
        train = [row.train_f1_mean for row in rows]
        assert stats.spearmanr(DEFAULT_ETAS, train).correlation <= -0.8
        assert np.all(np.isfinite(train))
