"""
Prebuilt subcommands for the horosvm CLI.
"""

# Import all command modules to trigger registration
from . import data_commands
from . import model_commands
from . import experiment_commands

__all__ = [
    "data_commands",
    "model_commands",
    "experiment_commands",
]
