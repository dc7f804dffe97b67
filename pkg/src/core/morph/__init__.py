"""形态词典: 词元和 UPOS 查询"""
from src.core.morph.tagmap import TagMap, parse_tag_map, load_tag_map, UNIVERSAL_TAGS, UNKNOWN_TAG
from src.core.morph.lexicon import (
    Analysis,
    MorphLexicon,
    parse_lexicon,
    load_lexicon,
    first_analysis,
    analyze_forms,
)

__all__ = [
    'TagMap',
    'parse_tag_map',
    'load_tag_map',
    'UNIVERSAL_TAGS',
    'UNKNOWN_TAG',
    'Analysis',
    'MorphLexicon',
    'parse_lexicon',
    'load_lexicon',
    'first_analysis',
    'analyze_forms',
]
