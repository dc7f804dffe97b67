"""CoNLL-U 树库读写与结构检查"""
from src.core.conllu.models import Token, MultiwordSpan, Sentence, Treebank, COLUMNS, EMPTY
from src.core.conllu.parser import (
    parse_conllu,
    serialize_conllu,
    serialize_sentence,
    read_treebank,
    write_treebank,
)
from src.core.conllu.validation import validate_tree, is_tree, Diagnostic, DiagnosticCode

__all__ = [
    'Token',
    'MultiwordSpan',
    'Sentence',
    'Treebank',
    'COLUMNS',
    'EMPTY',
    'parse_conllu',
    'serialize_conllu',
    'serialize_sentence',
    'read_treebank',
    'write_treebank',
    'validate_tree',
    'is_tree',
    'Diagnostic',
    'DiagnosticCode',
]
