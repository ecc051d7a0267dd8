"""Tests for LabeledDataset and the dataset file format."""

import numpy as np
import pytest

from horosvm.data.dataset import LabeledDataset
from horosvm.data.io import format_dataset, read_dataset, write_dataset
from horosvm.errors import (
    EmptyDataset,
    InvariantError,
    LabelError,
    LengthMismatch,
    ParseError,
)


class TestLabeledDataset:
    def test_invariants(self):
        with pytest.raises(EmptyDataset):
            LabeledDataset(np.zeros((0, 2)), [])
        with pytest.raises(LengthMismatch):
            LabeledDataset([[0.1, 0.2], [0.0, 0.1]], [1])
        with pytest.raises(InvariantError) as info:
            LabeledDataset([[0.1, 0.2], [0.9, 0.9]], [1, -1])
        assert info.value.index == 1

    def test_classes(self):
        data = LabeledDataset([[0.1, 0.0], [0.2, 0.0], [0.3, 0.0]], ["b", "a", "b"])
        assert data.classes == ["a", "b"]
        assert data.class_counts() == {"a": 1, "b": 2}
        assert not data.is_binary

    def test_binary_views(self):
        data = LabeledDataset([[0.1, 0.0], [0.2, 0.0], [0.3, 0.0]], [2, 0, 2])
        with pytest.raises(LabelError):
            data.binary_labels()
        binary = data.as_binary(2)
        assert binary.is_binary
        np.testing.assert_array_equal(binary.binary_labels(), [1.0, -1.0, 1.0])

    def test_subset_is_independent(self):
        data = LabeledDataset([[0.1, 0.0], [0.2, 0.0], [0.3, 0.0]], [1, -1, 1])
        part = data.subset([2, 0])
        np.testing.assert_array_equal(part.points, [[0.3, 0.0], [0.1, 0.0]])
        with pytest.raises(ValueError):
            data.points[0, 0] = 0.5

    def test_origin_perturbation(self, caplog):
        data = LabeledDataset([[0.0, 0.0], [0.5, 0.0]], [1, -1])
        moved = data.without_origin_points()
        assert np.linalg.norm(moved.points[0]) > 0.0
        assert np.linalg.norm(moved.points[0]) <= 1e-12
        assert "origin" in caplog.text
        assert moved.without_origin_points() is moved


class TestDatasetFiles:
    """Reading and writing the CSV format."""

    def test_write_then_read(self, tmp_path, rng):
        points = rng.uniform(-0.5, 0.5, size=(25, 3))
        data = LabeledDataset(points, rng.choice(["cat", "dog", "owl"], size=25))
        path = tmp_path / "sub" / "data.csv"
        write_dataset(path, data)
        assert read_dataset(path) == data

    def test_integer_labels(self, tmp_path):
        path = tmp_path / "ints.csv"
        path.write_text("dim=2\n0.1,0.2,-1\n0.3,0.1,1\n\n")
        data = read_dataset(path)
        assert data.is_binary
        assert data.classes == [-1, 1]

    def test_non_canonical_integers_stay_strings(self, tmp_path):
        path = tmp_path / "codes.csv"
        path.write_text("dim=1\n0.1,01\n0.2,2\n")
        assert read_dataset(path).classes == ["01", "2"]

    def test_format_text(self):
        data = LabeledDataset([[0.5, -0.25]], [3])
        assert format_dataset(data) == "dim=2\n0.5,-0.25,3\n"

    def test_row_outside_ball(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("dim=2\n0.1,0.1,1\n0.96,0.72,1\n")
        with pytest.raises(InvariantError) as info:
            read_dataset(path)
        assert info.value.index == 1
        assert info.value.line == 3
        assert info.value.norm == pytest.approx(1.2)

    def test_arity_mismatch(self, tmp_path):
        path = tmp_path / "short.csv"
        path.write_text("dim=3\n0.1,0.1,0.1,a\n0.1,0.2,a\n")
        with pytest.raises(ParseError) as info:
            read_dataset(path)
        assert info.value.line == 3

    @pytest.mark.parametrize("text", ["", "dimension=2\n0.1,0.1,a\n", "dim=2\n", "dim=0\n"])
    def test_bad_header_or_empty(self, tmp_path, text):
        path = tmp_path / "bad.csv"
        path.write_text(text)
        with pytest.raises(ParseError):
            read_dataset(path)

    def test_bad_number(self, tmp_path):
        path = tmp_path / "nan.csv"
        path.write_text("dim=2\n0.1,zero,a\n")
        with pytest.raises(ParseError) as info:
            read_dataset(path)
        assert info.value.line == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_dataset(tmp_path / "missing.csv")

    def test_unwritable_label(self, tmp_path):
        data = LabeledDataset([[0.1, 0.1]], ["a,b"])
        with pytest.raises(ValueError):
            write_dataset(tmp_path / "x.csv", data)

    @pytest.mark.parametrize("labels", [
        np.array(["1", "2"]),
        [" a", "b"],
        ["a", "b\n"],
        [1.0, 2.0],
        [True, False],
    ])
    def test_labels_that_would_change_are_refused(self, labels):
        data = LabeledDataset([[0.1, 0.1], [0.2, 0.1]], labels)
        with pytest.raises(LabelError):
            format_dataset(data)

    @pytest.mark.parametrize("labels", [
        [3, -1],
        ["01", "2"],
        ["a", "7"],
        ["-0", "x y"],
    ])
    def test_written_labels_read_back_exactly(self, tmp_path, labels):
        data = LabeledDataset([[0.1, 0.1], [0.2, 0.1]], labels)
        path = tmp_path / "labels.csv"
        write_dataset(path, data)
        back = read_dataset(path)
        assert back == data
        assert back.labels.dtype.kind == data.labels.dtype.kind

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.csv"
        path.write_bytes(b"dim=1\n0.1,a\n0.2,caf\xe9\n")
        with pytest.raises(ParseError) as info:
            read_dataset(path)
        assert info.value.line == 3
        assert "UTF-8" in info.value.reason

    def test_bundled_demo(self, demo_csv):
        data = read_dataset(demo_csv)
        assert len(data) == 100
        assert data.dim == 2
        assert data.classes == [0, 1, 2]
