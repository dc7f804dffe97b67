"""
目标句根节点解析

根据源句根节点 r 的对齐边数分三种情况:
    1. 恰好一条边 (r, t)      -> 直接选用
    2. 没有边                 -> 目标句倒序扫描,按层级贪心选取
    3. 多条边                 -> 选 |t - r| 最小者,相等时取较小的 t
选定的一对从对齐图中移除两端所有边,之后强制加入匹配。
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from src.core.alignment import AlignmentGraph, remove_incident
from src.core.conllu import Sentence
from src.core.errors import ProjectionError
from src.core.morph import UNKNOWN_TAG

PUNCT = "PUNCT"


class RootCase(str, Enum):
    """根节点解析走的分支"""
    SINGLE = "single"
    UNALIGNED = "unaligned"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class RootResolution:
    """
    Args:
        root_pair: (源位置, 目标位置),0 起
        graph: 清除两端边之后的对齐图
        case: 走的分支
        tier: 情况 2 命中的层级(1-4),其它情况为 None
    """
    root_pair: Tuple[int, int]
    graph: AlignmentGraph
    case: RootCase
    tier: Optional[int] = None

    @property
    def target_position(self) -> int:
        return self.root_pair[1]


def source_root_position(src: Sentence) -> int:
    """源句唯一根节点的 0 起位置"""
    roots = src.root_ids
    if not roots:
        raise ProjectionError("source sentence has no root")
    if len(roots) > 1:
        raise ProjectionError(f"source sentence has multiple roots: {roots}")
    return roots[0] - 1


def _tier_scan(tgt_upos: Sequence[str], src_root_upos: str) -> Tuple[int, int]:
    """倒序扫描目标句;前三层跳过 PUNCT 和未知词性 X"""
    tiers = [src_root_upos, "VERB", "NOUN"]
    for tier, wanted in enumerate(tiers, start=1):
        if wanted in (PUNCT, UNKNOWN_TAG):
            continue
        for position in reversed(range(len(tgt_upos))):
            tag = tgt_upos[position]
            if tag in (PUNCT, UNKNOWN_TAG):
                continue
            if tag == wanted:
                return position, tier
    return 0, 4


def resolve_root(
    src: Sentence,
    graph: AlignmentGraph,
    tgt_upos: Sequence[str],
) -> RootResolution:
    """
    确定目标句根节点并从对齐图中移除其两端的边

    Args:
        src: 源句(恰有一个 head=0 的 token)
        graph: 对齐图
        tgt_upos: 目标句 UPOS

    Raises:
        ProjectionError: 源句没有根或有多个根,或目标句为空
    """
    if graph.n_tgt == 0:
        raise ProjectionError("target sentence is empty")
    if len(tgt_upos) != graph.n_tgt:
        raise ProjectionError(f"expected {graph.n_tgt} target tags, got {len(tgt_upos)}")

    r = source_root_position(src)
    targets = graph.targets_of(r)

    if len(targets) == 1:
        case, tier, t = RootCase.SINGLE, None, targets[0]
    elif not targets:
        case = RootCase.UNALIGNED
        t, tier = _tier_scan(tgt_upos, src.tokens[r].upos)
    else:
        case, tier = RootCase.MULTIPLE, None
        t = min(targets, key=lambda candidate: (abs(candidate - r), candidate))

    return RootResolution(
        root_pair=(r, t),
        graph=remove_incident(graph, r, t),
        case=case,
        tier=tier,
    )


__all__ = ['resolve_root', 'RootResolution', 'RootCase', 'source_root_position']
