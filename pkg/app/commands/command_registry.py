from typing import Dict, List, Optional, Type
import logging

from app.commands.base_command import BaseCommand

logger = logging.getLogger(__name__)


class CommandRegistry:
    """Registry of CLI subcommands"""

    _commands: Dict[str, Type[BaseCommand]] = {}

    @classmethod
    def register(cls, name: str, command_class: Type[BaseCommand]):
        """Register a command class under a subcommand name"""
        command_class.name = name
        cls._commands[name] = command_class
        logger.debug(f"Registered command {name}: {command_class.__name__}")

    @classmethod
    def get_command(cls, name: str) -> Optional[Type[BaseCommand]]:
        return cls._commands.get(name)

    @classmethod
    def get_available_commands(cls) -> List[str]:
        return list(cls._commands.keys())

    @classmethod
    def create_command(cls, name: str) -> Optional[BaseCommand]:
        command_class = cls.get_command(name)
        if not command_class:
            logger.error(f"No command registered as {name}")
            return None
        return command_class()


def register_command(name: str):
    """Decorator to register a subcommand"""
    def decorator(command_class: Type[BaseCommand]):
        CommandRegistry.register(name, command_class)
        return command_class
    return decorator
