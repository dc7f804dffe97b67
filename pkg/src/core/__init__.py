"""Core 核心模块: 配置、错误类型、数据格式与命令基类"""
from src.core.config import settings
from src.core.errors import ProjectorError
from src.core.commands import BaseCommand, CommandResult, command_registry

__all__ = [
    'settings',
    'ProjectorError',
    'BaseCommand',
    'CommandResult',
    'command_registry',
]
