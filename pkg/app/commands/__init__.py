# Importing the command modules registers every subcommand
from app.commands import analysis_commands, corpus_commands, transform_commands  # noqa: F401
from app.commands.command_registry import CommandRegistry, register_command

__all__ = ["CommandRegistry", "register_command"]
