"""目标句输入: 每行一句,已分词,空白分隔"""
from pathlib import Path
from typing import List, Union


def parse_target_sentences(text: str) -> List[List[str]]:
    """空行保留为空句子,由投射阶段报错"""
    return [line.split() for line in text.splitlines()]


def read_target_sentences(path: Union[str, Path]) -> List[List[str]]:
    return parse_target_sentences(Path(path).read_text(encoding="utf-8"))


__all__ = ['parse_target_sentences', 'read_target_sentences']
