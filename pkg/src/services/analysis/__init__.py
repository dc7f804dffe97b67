"""按依存关系的错误分析"""
from src.services.analysis.relations import (
    RelationRow,
    RelationErrorTable,
    relation_table,
    universal_label,
)
from src.services.analysis.render import TABLE_FORMATS, TSV_COLUMNS, render_table, parse_table_tsv

__all__ = [
    'RelationRow',
    'RelationErrorTable',
    'relation_table',
    'universal_label',
    'TABLE_FORMATS',
    'TSV_COLUMNS',
    'render_table',
    'parse_table_tsv',
]
