"""子命令"""
from src.commands.loader import load_all_commands
from src.commands.project import ProjectCommand
from src.commands.evaluate import EvalCommand
from src.commands.analyze import AnalyzeCommand
from src.commands.match import MatchCommand
from src.commands.validate import ValidateCommand

__all__ = [
    'load_all_commands',
    'ProjectCommand',
    'EvalCommand',
    'AnalyzeCommand',
    'MatchCommand',
    'ValidateCommand',
]
