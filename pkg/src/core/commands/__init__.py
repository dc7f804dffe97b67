"""Core 命令模块"""
from src.core.commands.base import (
    BaseCommand,
    CommandResult,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_DATA,
    EXIT_PARTIAL,
)
from src.core.commands.registry import CommandRegistry, command_registry

__all__ = [
    'BaseCommand',
    'CommandResult',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_DATA',
    'EXIT_PARTIAL',
    'CommandRegistry',
    'command_registry',
]
