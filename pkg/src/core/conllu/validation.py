"""
依存树结构检查 - 单根、无环、无未标注 head
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import networkx as nx

from src.core.conllu.models import Sentence


class DiagnosticCode(str, Enum):
    """结构问题类型"""
    UNSET_HEAD = "unset head"
    NO_ROOT = "no root"
    MULTIPLE_ROOTS = "multiple roots"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Diagnostic:
    """一条结构问题,token_ids 为涉及的 token"""
    code: DiagnosticCode
    token_ids: Tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return self.message


def validate_tree(sentence: Sentence) -> List[Diagnostic]:
    """
    检查 head 关系是否构成一棵有根树

    Args:
        sentence: 待检查的句子

    Returns:
        诊断列表;为空当且仅当恰有一个 head=0、无环、无未标注 head
    """
    diagnostics: List[Diagnostic] = []
    n = len(sentence)

    # 依存方向 dep -> head,每个节点出度至多为 1
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))

    for token in sentence.tokens:
        if token.head is None:
            diagnostics.append(Diagnostic(
                DiagnosticCode.UNSET_HEAD, (token.id,), f"token {token.id}: unset head"
            ))
        elif token.head > 0:
            graph.add_edge(token.id, token.head)

    roots = tuple(sentence.root_ids)
    if not roots:
        diagnostics.append(Diagnostic(DiagnosticCode.NO_ROOT, (), "no token has head 0"))
    elif len(roots) > 1:
        diagnostics.append(Diagnostic(
            DiagnosticCode.MULTIPLE_ROOTS, roots,
            f"multiple roots: tokens {', '.join(map(str, roots))}"
        ))

    cycles = sorted(tuple(sorted(cycle)) for cycle in nx.simple_cycles(graph))
    for cycle in cycles:
        diagnostics.append(Diagnostic(
            DiagnosticCode.CYCLE, cycle, f"cycle: tokens {', '.join(map(str, cycle))}"
        ))

    return diagnostics


def is_tree(sentence: Sentence) -> bool:
    return not validate_tree(sentence)


__all__ = ['validate_tree', 'is_tree', 'Diagnostic', 'DiagnosticCode']
