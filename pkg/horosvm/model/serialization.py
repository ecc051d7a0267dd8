"""
Model files (YAML).

    kind: binary | ovr
    dim: 2
    classes: [0, 1, 2]          # ovr only
    classifiers:
    - {mu: 1.5, omega: [0.6, 0.8], b: 0.75}

Floats are written with 17 significant digits, so a loaded model reproduces
the saved decision values exactly.
"""

import logging
from pathlib import Path
from typing import Union

import yaml

from ..core.geometry import Horosphere
from ..errors import ModelFormatError
from .classifier import HoroClassifier
from .multiclass import OvRModel

logger = logging.getLogger(__name__)

KIND_BINARY = "binary"
KIND_OVR = "ovr"

PathLike = Union[str, Path]


class _ModelDumper(yaml.SafeDumper):
    """YAML dumper with flow-style scalar lists and full-precision floats."""
    pass


def _represent_list(dumper, data):
    flow = all(isinstance(item, (int, float, str)) for item in data)
    return dumper.represent_sequence('tag:yaml.org,2002:seq', data, flow_style=flow)


def _represent_dict(dumper, data):
    flow = set(data) == {"mu", "omega", "b"}
    return dumper.represent_mapping('tag:yaml.org,2002:map', data.items(), flow_style=flow)


def format_yaml_float(value: float) -> str:
    """%.17g, adjusted so YAML 1.1 resolvers read it back as a float."""
    text = f"{value:.17g}"
    if 'e' in text:
        mantissa, exponent = text.split('e')
        if '.' not in mantissa:
            mantissa += '.0'
        return f"{mantissa}e{exponent}"
    if '.' not in text and text.lstrip('-').isdigit():
        return text + '.0'
    return text


def _represent_float(dumper, data):
    return dumper.represent_scalar('tag:yaml.org,2002:float', format_yaml_float(data))


_ModelDumper.add_representer(list, _represent_list)
_ModelDumper.add_representer(dict, _represent_dict)
_ModelDumper.add_representer(float, _represent_float)


def model_to_dict(model) -> dict:
    if isinstance(model, OvRModel):
        return {
            'kind': KIND_OVR,
            'dim': model.dim,
            'classes': [c.item() if hasattr(c, 'item') else c for c in model.classes],
            'classifiers': [clf.boundary.to_dict() for clf in model.per_class],
        }
    if isinstance(model, HoroClassifier):
        return {
            'kind': KIND_BINARY,
            'dim': model.dim,
            'classifiers': [model.boundary.to_dict()],
        }
    raise TypeError(f"Cannot serialize {type(model).__name__}")


def model_from_dict(data) -> Union[HoroClassifier, OvRModel]:
    """Rebuild a model; raises ModelFormatError on any structural problem."""
    if not isinstance(data, dict):
        raise ModelFormatError("Model document must be a mapping")
    kind = data.get('kind')
    dim = data.get('dim')
    entries = data.get('classifiers')
    if kind not in (KIND_BINARY, KIND_OVR):
        raise ModelFormatError(f"Unknown model kind {kind!r}")
    if not isinstance(dim, int) or dim < 1:
        raise ModelFormatError(f"Invalid dim {dim!r}")
    if not isinstance(entries, list) or not entries:
        raise ModelFormatError("Missing classifier list")

    try:
        classifiers = [HoroClassifier(Horosphere.from_dict(e)) for e in entries]
    except (KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"Invalid classifier entry: {e}") from e
    if any(clf.dim != dim for clf in classifiers):
        raise ModelFormatError(f"Classifier dimension does not match dim={dim}")

    if kind == KIND_BINARY:
        if len(classifiers) != 1:
            raise ModelFormatError(f"Binary model needs 1 classifier, got {len(classifiers)}")
        return classifiers[0]

    classes = data.get('classes')
    if not isinstance(classes, list) or len(classes) != len(classifiers):
        raise ModelFormatError("OvR model needs one class label per classifier")
    try:
        return OvRModel(classes=tuple(classes), per_class=tuple(classifiers))
    except ValueError as e:
        raise ModelFormatError(str(e)) from e


def save_model(path: PathLike, model) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        yaml.dump(model_to_dict(model), f, Dumper=_ModelDumper, sort_keys=False)
    logger.debug(f"Saved model to {path}")


def load_model(path: PathLike) -> Union[HoroClassifier, OvRModel]:
    """
    Load a model file.

    Raises:
        OSError: file cannot be read
        ModelFormatError: not valid YAML or not a model document
    """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ModelFormatError(f"Invalid YAML in {path}: {e}") from e
    return model_from_dict(data)
