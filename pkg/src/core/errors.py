"""
异常层次 - 所有模块共用的错误类型

命令层按异常类型映射退出码:
    ConfigError       -> 1 (用法错误)
    其余 ProjectorError -> 2 (数据错误)
"""
from typing import Optional


class ProjectorError(Exception):
    """所有领域错误的基类"""


class ConfigError(ProjectorError):
    """配置无效或引用的文件不存在"""


class ConlluError(ProjectorError):
    """CoNLL-U 解析错误,带句子序号和行号"""

    def __init__(self, message: str, sentence: Optional[int] = None, line: Optional[int] = None):
        self.reason = message
        self.sentence = sentence
        self.line = line
        location = []
        if sentence is not None:
            location.append(f"sentence {sentence}")
        if line is not None:
            location.append(f"line {line}")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


class AlignmentError(ProjectorError):
    """对齐格式错误或下标越界"""


class LexiconError(ProjectorError):
    """词典 / 标签映射文件错误"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.reason = message
        self.line = line
        super().__init__(f"[line {line}] {message}" if line is not None else message)


class ProjectionError(ProjectorError):
    """单句投射失败"""

    def __init__(self, message: str, sentence: Optional[int] = None):
        self.reason = message
        self.sentence = sentence
        super().__init__(f"[sentence {sentence}] {message}" if sentence is not None else message)


class EvaluationError(ProjectorError):
    """评测输入不一致"""


class TextMismatchError(EvaluationError):
    """gold 与 system 去空白后的文本不同"""


class AnalysisError(ProjectorError):
    """错误分析输入不一致或输出格式未知"""


__all__ = [
    'ProjectorError',
    'ConfigError',
    'ConlluError',
    'AlignmentError',
    'LexiconError',
    'ProjectionError',
    'EvaluationError',
    'TextMismatchError',
    'AnalysisError',
]
