"""词对齐: 二部图、Pharaoh 格式、词性过滤、最大匹配"""
from src.core.alignment.graph import AlignmentGraph, Matching, Edge, remove_incident, merge_graphs
from src.core.alignment.pharaoh import (
    parse_pharaoh,
    parse_pairs,
    format_pharaoh,
    format_matching,
    read_alignment_lines,
)
from src.core.alignment.filtering import filter_by_pos
from src.core.alignment.matching import maximum_matching

__all__ = [
    'AlignmentGraph',
    'Matching',
    'Edge',
    'remove_incident',
    'merge_graphs',
    'parse_pharaoh',
    'parse_pairs',
    'format_pharaoh',
    'format_matching',
    'read_alignment_lines',
    'filter_by_pos',
    'maximum_matching',
]
