"""
Settings file.

    optim:    solver settings (OptimConfig)
    train:    c, restarts, seed, workers, downsample_ratio
    logging:  level, file

Missing sections or keys fall back to the module defaults. Command-line flags
override whatever the file sets.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import yaml

from .core.optim import OptimConfig
from .model.classifier import (
    DEFAULT_C,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    TrainConfig,
)

logger = logging.getLogger(__name__)

DEFAULT_LOG_LEVEL = "INFO"


@dataclass
class TrainDefaults:
    """Training values used when the command line does not set them."""
    c: float = DEFAULT_C
    restarts: int = DEFAULT_RESTARTS
    seed: int = DEFAULT_SEED
    workers: int = DEFAULT_WORKERS
    downsample_ratio: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            'c': self.c,
            'restarts': self.restarts,
            'seed': self.seed,
            'workers': self.workers,
            'downsample_ratio': self.downsample_ratio,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrainDefaults":
        ratio = data.get('downsample_ratio')
        return cls(
            c=float(data.get('c', DEFAULT_C)),
            restarts=int(data.get('restarts', DEFAULT_RESTARTS)),
            seed=int(data.get('seed', DEFAULT_SEED)),
            workers=int(data.get('workers', DEFAULT_WORKERS)),
            downsample_ratio=None if ratio is None else float(ratio),
        )


@dataclass
class LoggingSettings:
    level: str = DEFAULT_LOG_LEVEL
    file: Optional[str] = None

    def __post_init__(self):
        self.level = str(self.level).upper()
        if self.level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level '{self.level}'")

    def to_dict(self) -> dict:
        return {'level': self.level, 'file': self.file}

    @classmethod
    def from_dict(cls, data: dict) -> "LoggingSettings":
        return cls(level=data.get('level', DEFAULT_LOG_LEVEL), file=data.get('file'))


@dataclass
class Settings:
    optim: OptimConfig = field(default_factory=OptimConfig)
    train: TrainDefaults = field(default_factory=TrainDefaults)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    def train_config(self, **overrides) -> TrainConfig:
        """TrainConfig from these settings; keyword arguments that are not None win."""
        values = self.train.to_dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return TrainConfig(optim=self.optim, **values)

    def to_dict(self) -> dict:
        return {
            'optim': self.optim.to_dict(),
            'train': self.train.to_dict(),
            'logging': self.logging.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Settings":
        return cls(
            optim=OptimConfig.from_dict(data.get('optim') or {}),
            train=TrainDefaults.from_dict(data.get('train') or {}),
            logging=LoggingSettings.from_dict(data.get('logging') or {}),
        )


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """
    Load settings from a YAML file, or defaults when no path is given.

    Raises:
        OSError: the file cannot be read
        ValueError: a value is out of range or the document is not a mapping
    """
    if path is None:
        return Settings()
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Settings file {path} must contain a mapping")
    settings = Settings.from_dict(data)
    logger.debug(f"Settings loaded from {path}: {settings.to_dict()}")
    return settings
