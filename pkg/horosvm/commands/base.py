"""
Subcommand registry and decorator for the horosvm CLI.

Minimal decorator pattern - the decorator only handles registration; the
registry builds argparse subparsers and maps library errors to exit codes.
"""

import argparse
import functools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import yaml

from ..errors import (
    HoroSVMError,
    InvariantError,
    ModelFormatError,
    NonFiniteObjective,
    ParseError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4

Handler = Callable[[argparse.Namespace, object], Optional[int]]
Configure = Callable[[argparse.ArgumentParser], None]


@dataclass
class Command:
    """A registered subcommand: handler plus the function declaring its options."""
    name: str
    handler: Handler
    configure: Optional[Configure] = None
    help: str = ""


class CommandRegistry:
    """
    Registry for subcommand handlers.

    Commands are registered with the @register_command decorator. Each
    handler receives the parsed arguments and the loaded Settings, writes its
    output to stdout and returns an exit code (None means success).
    """

    def __init__(self):
        self._commands: Dict[str, Command] = {}

    def register(self, command: Command) -> None:
        if command.name in self._commands:
            logger.warning(f"Command '{command.name}' is being re-registered")
        self._commands[command.name] = command
        logger.debug(f"Registered command: {command.name}")

    def get(self, name: str) -> Optional[Command]:
        """Get a command by name."""
        return self._commands.get(name)

    def list_commands(self) -> list:
        """List all registered command names."""
        return list(self._commands.keys())

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """Attach one subparser per registered command."""
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for command in self._commands.values():
            sub = subparsers.add_parser(command.name, help=command.help,
                                        description=command.help)
            if command.configure is not None:
                command.configure(sub)

    def execute(self, name: str, args: argparse.Namespace, settings) -> int:
        """
        Run a command and translate failures into exit codes.

        Returns:
            0 success, 2 usage or data precondition, 3 I/O or malformed file,
            4 numerical failure
        """
        command = self.get(name)
        if command is None:
            logger.error(f"Unknown command: {name} (available: {', '.join(self.list_commands())})")
            return EXIT_USAGE

        try:
            code = command.handler(args, settings)
            return EXIT_OK if code is None else int(code)
        except NonFiniteObjective as e:
            logger.error(f"{name}: numerical failure: {e}")
            return EXIT_NUMERIC
        except (ParseError, InvariantError, ModelFormatError, yaml.YAMLError) as e:
            logger.error(f"{name}: {e}")
            return EXIT_IO
        except OSError as e:
            logger.error(f"{name}: {e}")
            return EXIT_IO
        except (HoroSVMError, ValueError) as e:
            # Validation error
            logger.error(f"{name}: {e}")
            return EXIT_USAGE


# Global registry instance
_registry = CommandRegistry()


def get_registry() -> CommandRegistry:
    """Get the global command registry."""
    return _registry


def register_command(func: Handler = None, *, name: str = None,
                     configure: Optional[Configure] = None, help: str = "") -> Callable:
    """
    Decorator to register a subcommand handler.

    Usage:
        def _options(parser):
            parser.add_argument("--data", required=True)

        @register_command(name="train", configure=_options, help="Train a model")
        def train(args, settings):
            ...
            return 0

    Command name defaults to the function name.
    """
    def decorator(fn: Handler) -> Handler:
        cmd_name = name if name is not None else fn.__name__
        doc = (fn.__doc__ or "").strip().splitlines()
        _registry.register(Command(cmd_name, fn, configure, help or (doc[0] if doc else "")))

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            return fn(*args, **kwargs)

        return wrapper

    if func is not None:
        # Called without parentheses: @register_command
        return decorator(func)
    else:
        # Called with parentheses: @register_command(name="...")
        return decorator
