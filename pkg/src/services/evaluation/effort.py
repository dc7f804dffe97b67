"""人工校正工作量估计: 把评测计数换算成需要增删改的条目数"""
from dataclasses import asdict, dataclass
from typing import Dict

from src.services.evaluation.scorer import EvalReport


@dataclass(frozen=True)
class EffortReport:
    """
    Attributes:
        arcs_to_remove: 系统输出中错误、需删除的弧 (UAS 精确率的缺口)
        arcs_to_add: gold 中缺失、需新建的弧 (UAS 召回率的缺口)
        labels_to_fix: 弧正确但 deprel 错误
        tags_to_fix: 词对齐但 UPOS 错误
        lemmas_to_fix: 词对齐但 LEMMA 错误
        tokens_to_add: gold 中未被对齐的词
        tokens_to_remove: 系统输出中未被对齐的词
    """
    arcs_to_remove: int = 0
    arcs_to_add: int = 0
    labels_to_fix: int = 0
    tags_to_fix: int = 0
    lemmas_to_fix: int = 0
    tokens_to_add: int = 0
    tokens_to_remove: int = 0

    @property
    def total(self) -> int:
        return sum(self.to_dict().values())

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def effort_report(report: EvalReport) -> EffortReport:
    uas, las, words = report.uas, report.las, report.words
    return EffortReport(
        arcs_to_remove=uas.system_total - uas.correct,
        arcs_to_add=uas.gold_total - uas.correct,
        labels_to_fix=uas.correct - las.correct,
        tags_to_fix=words.correct - report.upos.correct,
        lemmas_to_fix=words.correct - report.lemmas.correct,
        tokens_to_add=words.gold_total - words.correct,
        tokens_to_remove=words.system_total - words.correct,
    )


__all__ = ['EffortReport', 'effort_report']
