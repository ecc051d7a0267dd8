"""
Dataset files.

Format (UTF-8, comma-separated):

    dim=<n>
    x_1,...,x_n,label
    ...

Coordinates are written with 17 significant digits, so a read after a write
reproduces every float exactly. Labels are tokens without commas or
surrounding whitespace; when every token is a canonical integer ("3", "-1")
the labels are read back as ints. The writer refuses labels that would not
read back unchanged (string labels that all look like integers, floats).
"""

import logging
import re
from pathlib import Path
from typing import List, Union

import numpy as np

from ..core.geometry import EPS_BOUNDARY
from ..errors import InvariantError, LabelError, ParseError
from .dataset import LabeledDataset

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r'^\s*dim\s*=\s*(\d+)\s*$')

PathLike = Union[str, Path]


def _coerce_labels(tokens: List[str]) -> np.ndarray:
    """Integers when every token is a canonical integer, else strings."""
    try:
        ints = [int(t) for t in tokens]
    except ValueError:
        return np.array(tokens, dtype=str)
    if all(str(i) == t for i, t in zip(ints, tokens)):
        return np.array(ints, dtype=int)
    return np.array(tokens, dtype=str)


def read_dataset(path: PathLike) -> LabeledDataset:
    """
    Read a dataset file.

    Raises:
        OSError: file cannot be opened
        ParseError: malformed header or row, or bytes that are not UTF-8
            (carries the 1-based line number)
        InvariantError: a row lies on or outside the unit sphere
    """
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(raw.count(b"\n", 0, e.start) + 1, "invalid UTF-8") from None
    lines = text.splitlines()

    if not lines:
        raise ParseError(1, "empty file, expected header 'dim=<n>'")
    match = HEADER_PATTERN.match(lines[0])
    if not match:
        raise ParseError(1, f"expected header 'dim=<n>', got '{lines[0].strip()}'")
    dim = int(match.group(1))
    if dim < 1:
        raise ParseError(1, "dimension must be >= 1")

    rows = []
    tokens = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = [p.strip() for p in line.split(',')]
        if len(fields) != dim + 1:
            raise ParseError(line_no, f"expected {dim + 1} fields (dim={dim} + label), "
                                      f"got {len(fields)}")
        try:
            coords = [float(v) for v in fields[:dim]]
        except ValueError as e:
            raise ParseError(line_no, f"bad coordinate: {e}") from None
        if not fields[dim]:
            raise ParseError(line_no, "empty label")
        norm = float(np.linalg.norm(coords))
        if not norm < 1.0 - EPS_BOUNDARY:
            raise InvariantError(len(rows), line=line_no, norm=norm)
        rows.append(coords)
        tokens.append(fields[dim])

    if not rows:
        raise ParseError(len(lines), "no data rows")

    dataset = LabeledDataset(np.array(rows, dtype=float), _coerce_labels(tokens))
    logger.debug(f"Read {len(dataset)} samples (dim={dim}) from {path}")
    return dataset


def format_float(value: float) -> str:
    return f"{float(value):.17g}"


def _label_tokens(labels: np.ndarray) -> List[str]:
    """
    Label tokens that read back as exactly ``labels``.

    Raises:
        LabelError: a token is empty, holds a separator or surrounding
            whitespace, or the labels would come back with another type
            (integer-like strings, floats, booleans)
    """
    tokens = [str(label) for label in labels]
    for token in tokens:
        if token.splitlines() != [token] or token != token.strip() or ',' in token:
            raise LabelError(f"Label {token!r} cannot be written "
                             "(empty, padded or holds a separator)")
    back = _coerce_labels(tokens)
    kind = labels.dtype.kind
    if (kind not in "iuU" or (kind == "U") != (back.dtype.kind == "U")
            or not np.array_equal(back, labels)):
        raise LabelError(f"{labels.dtype} labels would not read back unchanged; "
                         "use int labels or names that are not integers")
    return tokens


def format_dataset(dataset: LabeledDataset) -> str:
    """Dataset as file text (header plus one row per sample)."""
    lines = [f"dim={dataset.dim}"]
    for coords, token in zip(dataset.points, _label_tokens(dataset.labels)):
        lines.append(",".join(format_float(v) for v in coords) + "," + token)
    return "\n".join(lines) + "\n"


def write_dataset(path: PathLike, dataset: LabeledDataset) -> None:
    """Write ``dataset`` in the CSV format above, creating parent directories."""
    path = Path(path)
    text = format_dataset(dataset)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.debug(f"Wrote {len(dataset)} samples to {path}")
