"""Tests for YAML model files."""

import numpy as np
import pytest
import yaml

from conftest import random_ball_points
from horosvm.core.geometry import Horosphere, IdealPoint
from horosvm.errors import ModelFormatError
from horosvm.model.classifier import HoroClassifier
from horosvm.model.multiclass import OvRModel, predict
from horosvm.model.serialization import (
    format_yaml_float,
    load_model,
    model_from_dict,
    model_to_dict,
    save_model,
)


def _clf(direction, mu, b):
    return HoroClassifier(Horosphere(mu=mu, omega=IdealPoint(direction), b=b))


class TestModelFiles:
    def test_binary(self, tmp_path, rng):
        clf = _clf([0.3, -0.4, 1.1], mu=1.0 / 3.0, b=0.123456789012345678)
        path = tmp_path / "models" / "binary.yaml"
        save_model(path, clf)
        loaded = load_model(path)
        assert isinstance(loaded, HoroClassifier)
        x = random_ball_points(rng, 50, 3)
        np.testing.assert_array_equal(loaded.decision_value(x), clf.decision_value(x))

    def test_ovr(self, tmp_path, rng):
        model = OvRModel(classes=("cat", "dog", "owl"),
                         per_class=(_clf([1.0, 0.0], 2.0, 0.5), _clf([0.0, 1.0], 0.7, 1.2),
                                    _clf([-1.0, -1.0], 1.3, 0.1)))
        path = tmp_path / "ovr.yaml"
        save_model(path, model)
        loaded = load_model(path)
        assert loaded.classes == model.classes
        x = random_ball_points(rng, 100, 2)
        np.testing.assert_array_equal(predict(loaded, x), predict(model, x))

    def test_layout(self, tmp_path):
        path = tmp_path / "m.yaml"
        save_model(path, _clf([1.0, 0.0], 2.0, 1.0))
        text = path.read_text()
        assert text.startswith("kind: binary\n")
        assert "{mu: 2.0, omega: [1.0, 0.0], b: 1.0}" in text

    def test_dict_form(self):
        data = model_to_dict(_clf([0.0, 1.0], 1.5, 0.75))
        assert data["kind"] == "binary"
        assert data["dim"] == 2
        assert data["classifiers"] == [{"mu": 1.5, "omega": [0.0, 1.0], "b": 0.75}]


class TestMalformed:
    @pytest.mark.parametrize("data", [
        [],
        {"kind": "tree", "dim": 2, "classifiers": [{"mu": 1.0, "omega": [1, 0], "b": 1.0}]},
        {"kind": "binary", "dim": 0, "classifiers": [{"mu": 1.0, "omega": [1, 0], "b": 1.0}]},
        {"kind": "binary", "dim": 2, "classifiers": []},
        {"kind": "binary", "dim": 2, "classifiers": [{"mu": 1.0, "omega": [1, 0]}]},
        {"kind": "binary", "dim": 2, "classifiers": [{"mu": -1.0, "omega": [1, 0], "b": 1.0}]},
        {"kind": "binary", "dim": 3, "classifiers": [{"mu": 1.0, "omega": [1, 0], "b": 1.0}]},
        {"kind": "ovr", "dim": 2, "classes": [0],
         "classifiers": [{"mu": 1.0, "omega": [1, 0], "b": 1.0}]},
        {"kind": "ovr", "dim": 2, "classes": [0, 1, 2],
         "classifiers": [{"mu": 1.0, "omega": [1, 0], "b": 1.0},
                         {"mu": 1.0, "omega": [0, 1], "b": 1.0}]},
    ])
    def test_rejected(self, data):
        with pytest.raises(ModelFormatError):
            model_from_dict(data)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("kind: [binary\n")
        with pytest.raises(ModelFormatError):
            load_model(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_model(tmp_path / "nope.yaml")


class TestFloatFormat:
    @pytest.mark.parametrize("value, text", [
        (3.0, "3.0"),
        (-2.0, "-2.0"),
        (0.1, "0.10000000000000001"),
        (1e20, "1.0e+20"),
    ])
    def test_text(self, value, text):
        assert format_yaml_float(value) == text

    @pytest.mark.parametrize("value", [3.0, 1e20, 1e-20, 2.5e-7, 1.0 / 3.0, -7.25e12])
    def test_reads_back_as_same_float(self, value):
        loaded = yaml.safe_load(format_yaml_float(value))
        assert isinstance(loaded, float)
        assert loaded == value
