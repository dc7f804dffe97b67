"""
词对齐二部图与匹配

AlignmentGraph: 源/目标词位置(0 起)之间的多对多边
Matching:       单射的部分映射,任一位置至多出现一次
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from src.core.config.options import MergeMode
from src.core.errors import AlignmentError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class AlignmentGraph:
    """源 -> 目标 方向存储的对齐边集合"""
    n_src: int
    n_tgt: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.n_src < 0 or self.n_tgt < 0:
            raise AlignmentError("graph dimensions must be non-negative")
        for src_pos, tgt_pos in self.edges:
            if not 0 <= src_pos < self.n_src:
                raise AlignmentError(f"source index out of range: {src_pos} (n_src={self.n_src})")
            if not 0 <= tgt_pos < self.n_tgt:
                raise AlignmentError(f"target index out of range: {tgt_pos} (n_tgt={self.n_tgt})")

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def targets_of(self, src_pos: int) -> List[int]:
        """与源位置相连的目标位置(升序)"""
        return sorted(t for s, t in self.edges if s == src_pos)

    def sources_of(self, tgt_pos: int) -> List[int]:
        return sorted(s for s, t in self.edges if t == tgt_pos)

    def adjacency(self) -> Dict[int, List[int]]:
        """源位置 -> 目标位置列表,只含有边的源位置"""
        adjacency: Dict[int, List[int]] = {}
        for src_pos, tgt_pos in self.sorted_edges():
            adjacency.setdefault(src_pos, []).append(tgt_pos)
        return adjacency

    def with_edges(self, edges: Iterable[Edge]) -> "AlignmentGraph":
        return AlignmentGraph(self.n_src, self.n_tgt, frozenset(edges))

    def swapped(self) -> "AlignmentGraph":
        """交换方向:用于 目标-源 顺序的对齐文件"""
        return AlignmentGraph(self.n_tgt, self.n_src, frozenset((t, s) for s, t in self.edges))


@dataclass(frozen=True)
class Matching:
    """单射匹配:任一源位置、目标位置至多出现一次"""
    pairs: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        sources = [s for s, _ in self.pairs]
        targets = [t for _, t in self.pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise AlignmentError(f"matching is not injective: {sorted(self.pairs)}")

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: Edge) -> bool:
        return pair in self.pairs

    @property
    def src_to_tgt(self) -> Dict[int, int]:
        return dict(self.pairs)

    @property
    def tgt_to_src(self) -> Dict[int, int]:
        return {t: s for s, t in self.pairs}

    def sorted_pairs(self) -> List[Edge]:
        return sorted(self.pairs)

    def with_pair(self, src_pos: int, tgt_pos: int) -> "Matching":
        """强制加入一对;若与已有的对冲突则报错"""
        return Matching(self.pairs | {(src_pos, tgt_pos)})


def remove_incident(graph: AlignmentGraph, src_pos: int, tgt_pos: int) -> AlignmentGraph:
    """
    删除所有与 src_pos 或 tgt_pos 相连的边

    调用方随后把 (src_pos, tgt_pos) 强制加入匹配,两端已无其它边,不会冲突。
    """
    return graph.with_edges((s, t) for s, t in graph.edges if s != src_pos and t != tgt_pos)


def merge_graphs(forward: AlignmentGraph, backward: AlignmentGraph, mode: MergeMode) -> AlignmentGraph:
    """
    合并两个方向的对齐(backward 已换成 源->目标 方向)

    Args:
        forward: 正向对齐
        backward: 反向对齐,维度须与 forward 一致
        mode: 并集或交集
    """
    if (forward.n_src, forward.n_tgt) != (backward.n_src, backward.n_tgt):
        raise AlignmentError(
            f"cannot merge graphs of size {forward.n_src}x{forward.n_tgt} "
            f"and {backward.n_src}x{backward.n_tgt}"
        )
    if MergeMode(mode) is MergeMode.INTERSECTION:
        return forward.with_edges(forward.edges & backward.edges)
    return forward.with_edges(forward.edges | backward.edges)


__all__ = ['AlignmentGraph', 'Matching', 'Edge', 'remove_incident', 'merge_graphs']
