"""命令加载器 - 返回所有内置子命令"""
from typing import List

from src.core.commands import BaseCommand
from src.commands.project import ProjectCommand
from src.commands.evaluate import EvalCommand
from src.commands.analyze import AnalyzeCommand
from src.commands.match import MatchCommand
from src.commands.validate import ValidateCommand


def load_all_commands() -> List[BaseCommand]:
    """加载所有命令(顺序即帮助信息中的顺序)"""
    return [
        # 流水线
        ProjectCommand(),
        EvalCommand(),
        AnalyzeCommand(),
        # 调试
        MatchCommand(),
        ValidateCommand(),
    ]


__all__ = ['load_all_commands']
