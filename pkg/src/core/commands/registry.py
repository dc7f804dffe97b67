"""
命令注册表 - 管理所有子命令

使用方式:
    from src.core.commands.registry import command_registry

    command_registry.register(ProjectCommand())
    command = command_registry.get('project')
"""
from typing import Dict, List, Optional

from src.core.commands.base import BaseCommand
from src.utils.logger import get_logger

logger = get_logger(__name__)


class CommandRegistry:
    """命令注册表 - 单例模式"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._commands: Dict[str, BaseCommand] = {}
            cls._instance._categories: Dict[str, List[str]] = {}
        return cls._instance

    def register(self, command: BaseCommand) -> None:
        """
        注册命令

        Args:
            command: 命令实例
        """
        if command.name in self._commands:
            logger.warning(f"命令 '{command.name}' 已存在,将被覆盖")

        self._commands[command.name] = command

        names = self._categories.setdefault(command.category, [])
        if command.name not in names:
            names.append(command.name)

        logger.debug(f"注册命令: {command.name} (类别: {command.category})")

    def register_batch(self, commands: List[BaseCommand]) -> None:
        """批量注册命令"""
        for command in commands:
            self.register(command)

    def get(self, name: str) -> Optional[BaseCommand]:
        """获取命令,不存在则返回 None"""
        return self._commands.get(name)

    def get_all(self) -> List[BaseCommand]:
        """按注册顺序返回所有命令"""
        return list(self._commands.values())

    def get_by_category(self, category: str) -> List[BaseCommand]:
        """
        根据类别获取命令

        Args:
            category: 命令类别(pipeline/debug)
        """
        names = self._categories.get(category, [])
        return [self._commands[name] for name in names if name in self._commands]

    def clear(self) -> None:
        """清空注册表"""
        self._commands.clear()
        self._categories.clear()

    def unregister(self, name: str) -> bool:
        """
        注销命令

        Returns:
            是否成功注销
        """
        command = self._commands.pop(name, None)
        if command is None:
            logger.warning(f"命令 '{name}' 不存在")
            return False

        names = self._categories.get(command.category, [])
        if name in names:
            names.remove(name)
            if not names:
                del self._categories[command.category]
        return True


# 创建全局注册表实例
command_registry = CommandRegistry()


__all__ = ['CommandRegistry', 'command_registry']
