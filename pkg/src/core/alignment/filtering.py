"""词性一致性过滤"""
from typing import Sequence

from src.core.alignment.graph import AlignmentGraph
from src.core.errors import AlignmentError


def filter_by_pos(
    graph: AlignmentGraph,
    src_upos: Sequence[str],
    tgt_upos: Sequence[str],
) -> AlignmentGraph:
    """
    对多重对齐的源词,只保留两端 UPOS 相同的边

    过滤后若某源词一条边都不剩,则恢复它原来的全部边;
    只有一条边(或没有边)的源词不受影响。

    Args:
        graph: 对齐图
        src_upos: 源句 UPOS,长度为 n_src
        tgt_upos: 目标句 UPOS(来自形态词典),长度为 n_tgt
    """
    if len(src_upos) != graph.n_src or len(tgt_upos) != graph.n_tgt:
        raise AlignmentError(
            f"tag lists ({len(src_upos)}, {len(tgt_upos)}) do not match "
            f"graph dimensions ({graph.n_src}, {graph.n_tgt})"
        )

    kept = []
    for src_pos, targets in graph.adjacency().items():
        if len(targets) < 2:
            kept.extend((src_pos, t) for t in targets)
            continue
        agreeing = [t for t in targets if tgt_upos[t] == src_upos[src_pos]]
        kept.extend((src_pos, t) for t in (agreeing or targets))

    return graph.with_edges(kept)


__all__ = ['filter_by_pos']
