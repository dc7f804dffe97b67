"""
按依存关系统计错误 - 每个 gold deprel 一行,记录 deprel 与 head 的正确数

分词与 gold 不同的句子整句排除,只计数;其余句子按位置逐词比较。
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from src.core.conllu import EMPTY, Token, Treebank
from src.core.errors import AnalysisError
from src.services.evaluation.scorer import to_percent
from src.services.projection.projector import Provenance
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _share(part: int, whole: int) -> float:
    return to_percent(Fraction(part, whole)) if whole else 0.0


@dataclass(frozen=True)
class RelationRow:
    deprel: str
    total: int
    deprel_correct: int
    head_correct: int

    def __post_init__(self):
        if self.total <= 0:
            raise AnalysisError(f"row {self.deprel!r} has no occurrences")
        if not 0 <= self.deprel_correct <= self.total or not 0 <= self.head_correct <= self.total:
            raise AnalysisError(f"row {self.deprel!r}: correct counts exceed total {self.total}")

    @property
    def deprel_share(self) -> float:
        return _share(self.deprel_correct, self.total)

    @property
    def head_share(self) -> float:
        return _share(self.head_correct, self.total)


@dataclass(frozen=True)
class RelationErrorTable:
    """
    Attributes:
        rows: 按 total 降序(同数按 deprel 字母序)
        excluded_sentences: 因分词不同被排除的句子数
        total_sentences: 输入句子总数
        deprel_errors / unmatched_deprel_errors: deprel 错误数,及其中系统 deprel 为 "_" 的个数
        head_errors / unmatched_head_errors: head 错误数,及其中来源标记为 unmatched-fallback 的个数
            (没有来源标记文件时为 None)
    """
    rows: Tuple[RelationRow, ...] = ()
    excluded_sentences: int = 0
    total_sentences: int = 0
    deprel_errors: int = 0
    unmatched_deprel_errors: int = 0
    head_errors: int = 0
    unmatched_head_errors: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def token_count(self) -> int:
        return sum(row.total for row in self.rows)

    @property
    def excluded_share(self) -> float:
        return _share(self.excluded_sentences, self.total_sentences)

    @property
    def unmatched_deprel_error_share(self) -> float:
        return _share(self.unmatched_deprel_errors, self.deprel_errors)

    @property
    def unmatched_head_error_share(self) -> Optional[float]:
        if self.unmatched_head_errors is None:
            return None
        return _share(self.unmatched_head_errors, self.head_errors)

    def row(self, deprel: str) -> Optional[RelationRow]:
        for item in self.rows:
            if item.deprel == deprel:
                return item
        return None


def universal_label(deprel: str) -> str:
    """obl:cau -> obl"""
    return deprel.split(":", 1)[0]


def _head_correct(gold_token: Token, system_token: Token) -> bool:
    return gold_token.head is not None and gold_token.head == system_token.head


def relation_table(
    gold: Treebank,
    system: Treebank,
    provenance: Optional[Mapping[Tuple[int, int], Provenance]] = None,
    strict: bool = True,
) -> RelationErrorTable:
    """
    统计每个 gold deprel 的正确率

    Args:
        gold: gold 树库
        system: 系统树库,与 gold 按位置对应
        provenance: (句子序号, token id) -> 来源标记;给出时统计未对齐词造成的 head 错误
        strict: False 时只比较冒号前的通用标签

    Raises:
        AnalysisError: 句子数不同
    """
    if len(gold) != len(system):
        raise AnalysisError(f"sentence counts differ: gold={len(gold)}, system={len(system)}")

    totals: Dict[str, List[int]] = {}
    excluded = 0
    included_tokens = 0
    deprel_errors = unmatched_deprel = head_errors = unmatched_head = 0

    for ordinal, (gold_sentence, system_sentence) in enumerate(zip(gold, system), start=1):
        if gold_sentence.forms != system_sentence.forms:
            logger.debug(f"第 {ordinal} 句分词与 gold 不同,已排除")
            excluded += 1
            continue
        included_tokens += len(gold_sentence)

        for gold_token, system_token in zip(gold_sentence.tokens, system_sentence.tokens):
            counts = totals.setdefault(gold_token.deprel, [0, 0, 0])
            counts[0] += 1

            if strict:
                deprel_ok = gold_token.deprel == system_token.deprel
            else:
                deprel_ok = universal_label(gold_token.deprel) == universal_label(system_token.deprel)
            if deprel_ok:
                counts[1] += 1
            else:
                deprel_errors += 1
                unmatched_deprel += system_token.deprel == EMPTY

            if _head_correct(gold_token, system_token):
                counts[2] += 1
            else:
                head_errors += 1
                if provenance is not None:
                    unmatched_head += provenance.get((ordinal, system_token.id)) is Provenance.UNMATCHED

    rows = sorted(
        (RelationRow(deprel, *counts) for deprel, counts in totals.items()),
        key=lambda row: (-row.total, row.deprel),
    )
    table = RelationErrorTable(
        rows=tuple(rows),
        excluded_sentences=excluded,
        total_sentences=len(gold),
        deprel_errors=deprel_errors,
        unmatched_deprel_errors=unmatched_deprel,
        head_errors=head_errors,
        unmatched_head_errors=unmatched_head if provenance is not None else None,
    )
    if table.token_count != included_tokens:
        raise AnalysisError(f"row totals {table.token_count} != included tokens {included_tokens}")
    if excluded:
        logger.warning(f"{excluded}/{len(gold)} 句因分词不同被排除 ({table.excluded_share:.2f}%)")
    return table


__all__ = ['RelationRow', 'RelationErrorTable', 'relation_table', 'universal_label']
