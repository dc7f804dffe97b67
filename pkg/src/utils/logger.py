"""
日志模块 - 控制台彩色输出 + 可选文件输出

使用方式:
    from src.utils.logger import get_logger, setup_logging

    setup_logging(settings.log_level, settings.log_file)
    logger = get_logger(__name__)
    logger.info("投射完成")
"""
import logging
from pathlib import Path
from typing import Optional

from src.utils.console import Fore, Style

ROOT_LOGGER = "treebank_projector"

_LEVEL_MARKS = {
    logging.DEBUG: ("🔍", Fore.BLUE),
    logging.INFO: ("✅", Fore.GREEN),
    logging.WARNING: ("⚠️ ", Fore.YELLOW),
    logging.ERROR: ("❌", Fore.RED),
    logging.CRITICAL: ("❌", Fore.RED + Style.BRIGHT),
}


class ConsoleFormatter(logging.Formatter):
    """带 emoji 级别标记的彩色格式"""

    def format(self, record: logging.LogRecord) -> str:
        mark, color = _LEVEL_MARKS.get(record.levelno, ("", ""))
        message = super().format(record)
        return f"{color}{mark} {message}{Style.RESET_ALL}"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> logging.Logger:
    """
    配置根日志器(重复调用会替换旧的 handler)

    Args:
        level: 日志级别名称
        log_file: 日志文件路径,None 表示只输出到控制台

    Returns:
        项目根日志器
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper())

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console = logging.StreamHandler()
    console.setFormatter(ConsoleFormatter("%(message)s"))
    logger.addHandler(console)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """获取子日志器,名称统一挂在项目根日志器下"""
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


__all__ = ['setup_logging', 'get_logger', 'ConsoleFormatter', 'ROOT_LOGGER']
