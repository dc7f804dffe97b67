"""
Treebank Projector - 主入口
经词对齐把源语言树库的依存注释投射到目标语言,并评测投射结果

使用方式:
    python main.py project --config config/project.env
    python main.py eval gold.conllu projected.conllu --tsv scores.tsv
    python main.py analyze gold.conllu projected.conllu projected.conllu.provenance.tsv
    python main.py match alignments.txt
    python main.py validate treebank.conllu

退出码: 0 成功 / 1 用法错误 / 2 数据错误 / 3 部分失败
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

# 添加项目根目录到路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.commands import load_all_commands
from src.core.commands import EXIT_USAGE, command_registry
from src.core.config import settings
from src.utils.logger import get_logger, setup_logging

logger = get_logger("main")


class UsageArgumentParser(argparse.ArgumentParser):
    """参数错误时以退出码 1 结束"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """根据命令注册表构建解析器"""
    parser = UsageArgumentParser(
        prog="treebank-projector",
        description="依存注释投射与评测工具",
    )
    parser.add_argument("--log-level", dest="log_level", help=f"日志级别(默认 {settings.log_level})")
    parser.add_argument("--log-file", dest="log_file", help="另写一份日志到文件")

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=UsageArgumentParser)
    for command in command_registry.get_all():
        subparser = subparsers.add_parser(command.name, help=command.description, description=command.description)
        command.add_arguments(subparser)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    command_registry.clear()
    command_registry.register_batch(load_all_commands())

    args = vars(build_parser().parse_args(argv))
    setup_logging(args.pop("log_level") or settings.log_level, args.pop("log_file") or settings.log_file)

    name = args.pop("command")
    logger.debug(f"运行子命令: {name} {args}")
    result = command_registry.get(name).run(**args)
    if result.output:
        print(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
