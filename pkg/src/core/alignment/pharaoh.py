"""
Pharaoh 对齐格式: 每行一个句对,空白分隔的 "i-j",下标从 0 开始
"""
import re
from pathlib import Path
from typing import Iterable, List, Union

from src.core.alignment.graph import AlignmentGraph, Matching
from src.core.errors import AlignmentError

_PAIR = re.compile(r"^([0-9]+)-([0-9]+)$")


def parse_pairs(line: str) -> List[tuple]:
    """解析一行中的 (i, j) 对,不检查范围,保留重复"""
    pairs = []
    for item in line.split():
        found = _PAIR.match(item)
        if found is None:
            raise AlignmentError(f"malformed alignment pair '{item}'")
        pairs.append((int(found.group(1)), int(found.group(2))))
    return pairs


def parse_pharaoh(line: str, n_src: int, n_tgt: int) -> AlignmentGraph:
    """
    解析一行 Pharaoh 对齐

    Args:
        line: 空白分隔的 "i-j" 对
        n_src: 源句 token 数
        n_tgt: 目标句 token 数

    Returns:
        去重后的对齐图

    Raises:
        AlignmentError: 格式错误或下标越界
    """
    edges = set()
    for src_pos, tgt_pos in parse_pairs(line):
        if src_pos >= n_src:
            raise AlignmentError(f"source index out of range: {src_pos} (n_src={n_src})")
        if tgt_pos >= n_tgt:
            raise AlignmentError(f"target index out of range: {tgt_pos} (n_tgt={n_tgt})")
        edges.add((src_pos, tgt_pos))
    return AlignmentGraph(n_src, n_tgt, frozenset(edges))


def format_pharaoh(pairs: Iterable[tuple]) -> str:
    """按升序输出 "i-j" 行"""
    return " ".join(f"{s}-{t}" for s, t in sorted(pairs))


def format_matching(matching: Matching) -> str:
    return format_pharaoh(matching.pairs)


def read_alignment_lines(path: Union[str, Path]) -> List[str]:
    """读取对齐文件,每行对应一个句对(保留空行)"""
    text = Path(path).read_text(encoding="utf-8")
    return text.splitlines()


__all__ = [
    'parse_pharaoh',
    'parse_pairs',
    'format_pharaoh',
    'format_matching',
    'read_alignment_lines',
]
