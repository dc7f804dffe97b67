"""analyze 子命令 - 按依存关系的错误表"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from src.core.commands import BaseCommand, CommandResult
from src.core.conllu import read_treebank
from src.services.analysis import TABLE_FORMATS, relation_table, render_table
from src.services.projection import read_provenance


class AnalyzeArgs(BaseModel):
    gold: Path
    system: Path
    provenance: Optional[Path] = None
    format: str = "text"
    relaxed: bool = False


class AnalyzeCommand(BaseCommand):
    name = "analyze"
    description = "统计每个 deprel 的标签与 head 正确率,以及未对齐词造成的错误占比"
    category = "pipeline"
    args_schema = AnalyzeArgs

    def add_arguments(self, parser) -> None:
        parser.add_argument("gold", help="gold CoNLL-U")
        parser.add_argument("system", help="system CoNLL-U")
        parser.add_argument("provenance", nargs="?", help="project 写出的来源标记 TSV")
        parser.add_argument("--format", choices=TABLE_FORMATS, default="text")
        parser.add_argument("--relaxed", action="store_true", help="只比较冒号前的通用标签")

    def execute(
        self,
        gold: Path,
        system: Path,
        provenance: Optional[Path] = None,
        format: str = "text",
        relaxed: bool = False,
    ) -> CommandResult:
        flags = read_provenance(provenance) if provenance is not None else None
        table = relation_table(read_treebank(gold), read_treebank(system), flags, strict=not relaxed)
        return CommandResult(
            success=True,
            output=render_table(table, format).rstrip("\n"),
            metadata={"table": table},
        )


__all__ = ['AnalyzeCommand', 'AnalyzeArgs']
