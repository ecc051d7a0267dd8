"""
Command-line entry point: ``horosvm <command> [options]``.

Exit codes: 0 success, 2 usage, 3 I/O or malformed input, 4 numerical failure.
"""

import argparse
import logging
import sys
from typing import List, Optional

import yaml

from . import __version__
from .commands import EXIT_IO, EXIT_USAGE, get_registry
from .commands import prebuilt  # noqa: F401  (registers the subcommands)
from .config import load_settings
from .utils.logging import setup_logging


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horosvm",
        description="HoroSVM - horospherical classifiers on the Poincare ball"
    )
    parser.add_argument(
        "-c", "--config",
        help="Path to settings YAML (default: built-in defaults)"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging"
    )
    parser.add_argument(
        "--log-file",
        help="Also write logs to this file"
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}"
    )
    get_registry().add_subparsers(parser)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for the horosvm CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 after --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings(args.config)
    except (OSError, yaml.YAMLError) as e:
        setup_logging(verbose=args.verbose)
        logging.getLogger(__name__).error(f"Cannot load settings: {e}")
        return EXIT_IO
    except ValueError as e:
        setup_logging(verbose=args.verbose)
        logging.getLogger(__name__).error(f"Invalid settings: {e}")
        return EXIT_USAGE

    setup_logging(
        verbose=args.verbose,
        log_file=args.log_file or settings.logging.file,
        level=settings.logging.level,
    )
    logger = logging.getLogger(__name__)
    logger.debug(f"Running '{args.command}'")

    code = get_registry().execute(args.command, args, settings)
    logger.debug(f"'{args.command}' finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
