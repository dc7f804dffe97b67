"""Utils 工具类模块"""
from src.utils.console import Fore, Style, header
from src.utils.logger import setup_logging, get_logger

__all__ = ['Fore', 'Style', 'header', 'setup_logging', 'get_logger']
