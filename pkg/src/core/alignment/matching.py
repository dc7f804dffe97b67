"""
最大匹配 - 在对齐二部图上用 Hopcroft-Karp 求最大基数匹配

节点编号: 源位置 s -> s,目标位置 t -> n_src + t。
节点和边都按升序插入,搜索顺序固定,同一输入总是得到同一匹配。
"""
import networkx as nx
from networkx.algorithms import bipartite

from src.core.alignment.graph import AlignmentGraph, Matching


def maximum_matching(graph: AlignmentGraph) -> Matching:
    """
    求对齐图的最大匹配

    Args:
        graph: 对齐二部图

    Returns:
        Matching,是 graph.edges 的子集,基数等于最大匹配基数
    """
    if not graph.edges:
        return Matching()

    offset = graph.n_src
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n_src), bipartite=0)
    nx_graph.add_nodes_from(range(offset, offset + graph.n_tgt), bipartite=1)
    nx_graph.add_edges_from((s, offset + t) for s, t in graph.sorted_edges())

    mate = bipartite.hopcroft_karp_matching(nx_graph, top_nodes=range(graph.n_src))
    pairs = frozenset(
        (node, partner - offset)
        for node, partner in mate.items()
        if node < offset
    )
    return Matching(pairs)


__all__ = ['maximum_matching']
