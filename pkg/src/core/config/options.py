"""流水线开关的取值范围"""
from enum import Enum


class MergeMode(str, Enum):
    """正反两个方向对齐的合并方式"""
    UNION = "union"
    INTERSECTION = "intersection"


class RootOrder(str, Enum):
    """根节点解析与词性过滤的先后顺序"""
    FILTER_FIRST = "filter-first"
    ROOT_FIRST = "root-first"


class UposSource(str, Enum):
    """匹配成功的目标词 UPOS 来源"""
    PROJECTED = "projected"
    LEXICON = "lexicon"


__all__ = ['MergeMode', 'RootOrder', 'UposSource']
