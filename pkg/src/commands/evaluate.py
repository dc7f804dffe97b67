"""eval 子命令 - 用 gold 树库评测系统输出"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from src.core.commands import BaseCommand, CommandResult
from src.core.conllu import read_treebank
from src.services.evaluation import (
    effort_report,
    format_effort_text,
    format_report_text,
    format_report_tsv,
    score,
)
from src.utils.console import header


class EvalArgs(BaseModel):
    gold: Path = Field(description="gold 树库")
    system: Path = Field(description="待评测树库")
    tsv: Optional[Path] = Field(default=None, description="TSV 结果输出路径")


class EvalCommand(BaseCommand):
    name = "eval"
    description = "计算 Words / Lemmas / UPOS / UAS / LAS 的 P/R/F1 和校正工作量"
    category = "pipeline"
    args_schema = EvalArgs

    def add_arguments(self, parser) -> None:
        parser.add_argument("gold", help="gold CoNLL-U")
        parser.add_argument("system", help="system CoNLL-U")
        parser.add_argument("--tsv", help="另存 TSV 结果")

    def execute(self, gold: Path, system: Path, tsv: Optional[Path] = None) -> CommandResult:
        report = score(read_treebank(gold), read_treebank(system))
        effort = effort_report(report)

        if tsv is not None:
            tsv.parent.mkdir(parents=True, exist_ok=True)
            tsv.write_text(format_report_tsv(report), encoding="utf-8", newline="\n")
            self.logger.info(f"TSV 已写出: {tsv}")

        output = "\n".join([
            header(f"📊 {system} vs {gold}"),
            format_report_text(report),
            "",
            format_effort_text(effort),
        ])
        return CommandResult(
            success=True,
            output=output,
            metadata={"report": report, "effort": effort},
        )


__all__ = ['EvalCommand', 'EvalArgs']
