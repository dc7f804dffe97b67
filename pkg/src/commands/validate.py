"""validate 子命令 - 检查 CoNLL-U 文件中每句是否构成合法的树"""
from pathlib import Path

from pydantic import BaseModel

from src.core.commands import BaseCommand, CommandResult, EXIT_DATA
from src.core.conllu import read_treebank, validate_tree
from src.utils.console import Fore


class ValidateArgs(BaseModel):
    treebank: Path


class ValidateCommand(BaseCommand):
    name = "validate"
    description = "报告无根、多根、有环和未标注 head 的句子"
    category = "debug"
    args_schema = ValidateArgs

    def add_arguments(self, parser) -> None:
        parser.add_argument("treebank", help="CoNLL-U 文件")

    def execute(self, treebank: Path) -> CommandResult:
        sentences = read_treebank(treebank)
        lines = []
        invalid = []
        for ordinal, sentence in enumerate(sentences, start=1):
            for problem in validate_tree(sentence):
                label = sentence.sent_id or f"#{ordinal}"
                lines.append(f"{ordinal}\t{label}\t{problem.code.value}\t{problem.message}")
                if not invalid or invalid[-1] != ordinal:
                    invalid.append(ordinal)

        if not invalid:
            return CommandResult(success=True, output=f"{Fore.GREEN}✅ {len(sentences)} sentences, all valid trees")

        lines.append(f"{Fore.RED}❌ {len(invalid)}/{len(sentences)} sentences invalid")
        return CommandResult(
            success=False,
            output="\n".join(lines),
            exit_code=EXIT_DATA,
            metadata={"invalid": invalid},
            error=f"{len(invalid)} invalid sentences",
        )


__all__ = ['ValidateCommand', 'ValidateArgs']
