"""
project 子命令 - 投射整个树库并写出 CoNLL-U 与来源标记

退出码: 0 全部成功;3 部分句子失败(另写错误清单);1 配置错误;2 数据错误
"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from src.core.alignment import read_alignment_lines
from src.core.commands import BaseCommand, CommandResult, EXIT_OK, EXIT_PARTIAL
from src.core.config import MergeMode, RootOrder, UposSource, load_pipeline_config
from src.core.conllu import read_treebank, write_treebank
from src.core.morph import load_lexicon, load_tag_map
from src.services.evaluation import effort_report, format_effort_text, format_report_text, score
from src.services.projection import (
    ProjectionOptions,
    Provenance,
    RootCase,
    project_treebank,
    read_target_sentences,
    write_failures,
    write_provenance,
)
from src.utils.console import Fore, header


class ProjectArgs(BaseModel):
    """project 参数;None 表示沿用配置文件或默认值"""
    config: Optional[Path] = Field(default=None, description="扁平 key=value 配置文件")
    source_treebank: Optional[Path] = None
    target_sentences: Optional[Path] = None
    alignments: Optional[Path] = None
    reverse_alignments: Optional[Path] = None
    lexicon: Optional[Path] = None
    tag_map: Optional[Path] = None
    gold_treebank: Optional[Path] = None
    output: Optional[Path] = None
    provenance: Optional[Path] = None
    merge_mode: Optional[MergeMode] = None
    swap_direction: Optional[bool] = None
    root_order: Optional[RootOrder] = None
    upos_source: Optional[UposSource] = None
    workers: Optional[int] = Field(default=None, ge=1)


class ProjectCommand(BaseCommand):
    name = "project"
    description = "把源语言树库的依存注释经词对齐投射到目标句"
    category = "pipeline"
    args_schema = ProjectArgs

    def add_arguments(self, parser) -> None:
        parser.add_argument("--config", help="扁平 key=value 配置文件")
        parser.add_argument("--source-treebank", dest="source_treebank", help="源语言 CoNLL-U")
        parser.add_argument("--target-sentences", dest="target_sentences", help="目标句,每行一句")
        parser.add_argument("--alignments", help="Pharaoh 对齐文件")
        parser.add_argument("--reverse-alignments", dest="reverse_alignments", help="反方向对齐文件")
        parser.add_argument("--lexicon", help="形态词典 TSV")
        parser.add_argument("--tag-map", dest="tag_map", help="原始标签 -> UPOS 映射")
        parser.add_argument("--gold", dest="gold_treebank", help="gold 树库,给出时顺带评测")
        parser.add_argument("--output", help="输出 CoNLL-U")
        parser.add_argument("--provenance", help="来源标记 TSV(默认 <output>.provenance.tsv)")
        parser.add_argument("--merge-mode", dest="merge_mode", choices=[m.value for m in MergeMode])
        parser.add_argument("--swap-direction", dest="swap_direction", action="store_true", default=None, help="对齐文件为 目标-源 顺序")
        parser.add_argument("--no-swap-direction", dest="swap_direction", action="store_false", default=None, help="对齐文件为 源-目标 顺序(覆盖配置文件)")
        parser.add_argument("--root-order", dest="root_order", choices=[o.value for o in RootOrder])
        parser.add_argument("--upos-source", dest="upos_source", choices=[u.value for u in UposSource])
        parser.add_argument("--workers", type=int)

    def execute(self, config: Optional[Path] = None, **overrides) -> CommandResult:
        pipeline = load_pipeline_config(config, overrides)
        for key, value in pipeline.describe().items():
            self.logger.info(f"{key} = {value}")

        tag_map = load_tag_map(pipeline.tag_map)
        lexicon = load_lexicon(pipeline.lexicon, tag_map)
        source = read_treebank(pipeline.source_treebank)
        targets = read_target_sentences(pipeline.target_sentences)
        alignments = read_alignment_lines(pipeline.alignments)
        reverse = (
            read_alignment_lines(pipeline.reverse_alignments)
            if pipeline.reverse_alignments is not None
            else None
        )

        options = ProjectionOptions(
            merge_mode=pipeline.merge_mode,
            swap_direction=pipeline.swap_direction,
            root_order=pipeline.root_order,
            upos_source=pipeline.upos_source,
            workers=pipeline.workers,
        )
        outcome = project_treebank(source, targets, alignments, lexicon, options, reverse)

        write_treebank(outcome.treebank, pipeline.output)
        write_provenance(outcome, pipeline.provenance_path)

        reports = outcome.reports
        lines = [
            header("📐 投射结果"),
            f"{Fore.GREEN}sentences projected: {len(outcome.results)}/{len(source)}",
            f"matched tokens:      {sum(r.matched for r in reports)}",
            f"forced root tokens:  {sum(r.forced for r in reports)}",
            f"unmatched tokens:    {sum(r.unmatched for r in reports)}",
            "root cases:          " + " ".join(f"{case.value}={sum(r.root_case is case for r in reports)}" for case in RootCase),
            f"output:     {pipeline.output}",
            f"provenance: {pipeline.provenance_path}",
        ]
        metadata = {
            "projected": len(outcome.results),
            "failed": [failure.ordinal for failure in outcome.failures],
            "flags": {flag.value: sum(result.count(flag) for _, result in outcome.results) for flag in Provenance},
            "reports": reports,
        }

        if not outcome.success:
            write_failures(outcome.failures, pipeline.error_manifest_path)
            lines.append(f"{Fore.YELLOW}⚠️  {len(outcome.failures)} sentence(s) failed, see {pipeline.error_manifest_path}")
            return CommandResult(
                success=False,
                output="\n".join(lines),
                exit_code=EXIT_PARTIAL,
                metadata=metadata,
                error=f"{len(outcome.failures)} of {len(source)} sentences failed",
            )

        if pipeline.gold_treebank is not None:
            report = score(read_treebank(pipeline.gold_treebank), outcome.treebank)
            lines.extend(["", header("📊 评测 (gold vs projected)"), format_report_text(report), "", format_effort_text(effort_report(report))])
            metadata["evaluation"] = report

        return CommandResult(success=True, output="\n".join(lines), exit_code=EXIT_OK, metadata=metadata)


__all__ = ['ProjectCommand', 'ProjectArgs']
