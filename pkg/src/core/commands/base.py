"""
命令基类 - 统一的子命令接口

所有子命令必须继承 BaseCommand,并实现 execute()

使用示例:
    class MatchCommand(BaseCommand):
        name = "match"
        description = "打印每行对齐的最大匹配"
        args_schema = MatchArgs

        def add_arguments(self, parser):
            parser.add_argument("alignments")

        def execute(self, alignments, **kwargs):
            return CommandResult(success=True, output="...")
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional, Type

from pydantic import BaseModel, ValidationError

from src.core.errors import ConfigError, ProjectorError
from src.utils.logger import get_logger

# ========== 退出码 ==========
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PARTIAL = 3


@dataclass
class CommandResult:
    """命令执行结果"""
    success: bool
    output: str = ""
    exit_code: int = EXIT_OK
    metadata: Dict[str, Any] = None
    error: Optional[str] = None

    def __post_init__(self):
        if self.metadata is None:
            self.metadata = {}


class BaseCommand(ABC):
    """
    子命令抽象基类

    生命周期: before_run -> execute -> (handle_error) -> after_run
    """

    name: str = ""
    description: str = ""
    category: str = "pipeline"
    args_schema: Optional[Type[BaseModel]] = None

    def __init__(self):
        self.logger = get_logger(f"commands.{self.name}")

    def add_arguments(self, parser) -> None:
        """向 argparse 子解析器注册本命令的参数"""

    def before_run(self, **kwargs) -> Dict[str, Any]:
        """
        执行前钩子: 按 args_schema 验证参数

        Returns:
            验证后的参数字典
        """
        if self.args_schema is None:
            return kwargs
        return dict(self.args_schema.model_validate(kwargs))

    def after_run(self, result: CommandResult) -> CommandResult:
        """执行后钩子: 记录结果"""
        if result.exit_code == EXIT_OK:
            self.logger.debug(f"[{self.name}] 完成")
        elif result.exit_code == EXIT_PARTIAL:
            self.logger.warning(f"[{self.name}] 部分失败: {result.error}")
        else:
            self.logger.error(f"[{self.name}] 失败 (exit {result.exit_code}): {result.error}")
        return result

    def run(self, **kwargs) -> CommandResult:
        """执行命令(子类不需要覆盖)"""
        try:
            params = self.before_run(**kwargs)
            result = self.execute(**params)
        except Exception as e:
            result = self.handle_error(e, **kwargs)
        return self.after_run(result)

    @abstractmethod
    def execute(self, **kwargs) -> CommandResult:
        """
        实际执行逻辑(子类必须实现)
        """

    def handle_error(self, error: Exception, **kwargs) -> CommandResult:
        """
        错误处理: 按异常类型映射退出码

        Args:
            error: 异常对象
            **kwargs: 执行参数

        Returns:
            失败的 CommandResult
        """
        if isinstance(error, (ConfigError, ValidationError)):
            exit_code = EXIT_USAGE
        elif isinstance(error, (ProjectorError, OSError)):
            exit_code = EXIT_DATA
        else:
            self.logger.exception(f"[{self.name}] 未预期的错误")
            exit_code = EXIT_DATA
        return CommandResult(success=False, exit_code=exit_code, error=str(error))


__all__ = [
    'BaseCommand',
    'CommandResult',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_DATA',
    'EXIT_PARTIAL',
]
