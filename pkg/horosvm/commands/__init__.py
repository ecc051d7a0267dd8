"""Subcommand registry for the horosvm CLI."""

from .base import (
    EXIT_IO,
    EXIT_NUMERIC,
    EXIT_OK,
    EXIT_USAGE,
    Command,
    CommandRegistry,
    get_registry,
    register_command,
)

__all__ = [
    "EXIT_IO",
    "EXIT_NUMERIC",
    "EXIT_OK",
    "EXIT_USAGE",
    "Command",
    "CommandRegistry",
    "get_registry",
    "register_command",
]
