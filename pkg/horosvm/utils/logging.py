"""
Dual-sink logging for horosvm.

Logs to stderr AND, optionally, a log file. stdout is left to command output
(CSV tables, metric reports) so it can be piped.
"""

import sys
import logging
from pathlib import Path
from typing import Optional


DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def setup_logging(verbose: bool = False,
                  log_file: Optional[str] = None,
                  log_format: Optional[str] = None,
                  level: Optional[str] = None) -> logging.Logger:
    """
    Setup dual-sink logging.

    Args:
        verbose: If True, set log level to DEBUG. Overrides ``level``.
        log_file: Optional log file path. Parent directories are created.
        log_format: Override log format string.
        level: Level name from the settings file (DEBUG, INFO, WARNING, ERROR).

    Returns:
        The ``horosvm`` package logger
    """
    if verbose:
        resolved = logging.DEBUG
    else:
        resolved = LEVELS.get((level or "INFO").upper(), logging.INFO)

    if log_format is None:
        log_format = DEFAULT_LOG_FORMAT

    handlers = []

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(resolved)
    console_handler.setFormatter(logging.Formatter(log_format))
    handlers.append(console_handler)

    if log_file:
        try:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file, mode='a')
            file_handler.setLevel(resolved)
            file_handler.setFormatter(logging.Formatter(log_format))
            handlers.append(file_handler)
        except OSError as e:
            print(f"Warning: Could not setup file logging at {log_file}: {e}",
                  file=sys.stderr)

    # force=True so repeated CLI invocations in one process (tests) reconfigure
    logging.basicConfig(
        level=resolved,
        format=log_format,
        handlers=handlers,
        force=True,
    )

    logger = logging.getLogger("horosvm")
    logger.setLevel(resolved)

    return logger
