"""
错误表输出 - 对齐文本表格 / TSV

TSV 头部的 `# key=value` 行保存原始计数,parse_table_tsv 据此还原出相等的表。
"""
import re
from decimal import Decimal, ROUND_HALF_UP
from typing import Callable, Dict, List

from src.core.errors import AnalysisError
from src.services.analysis.relations import RelationErrorTable, RelationRow

TABLE_FORMATS = ("text", "tsv")
TSV_COLUMNS = ("deprel", "total", "deprel_correct", "head_correct", "deprel_share", "head_share")

_COUNT_KEYS = (
    "excluded_sentences",
    "total_sentences",
    "deprel_errors",
    "unmatched_deprel_errors",
    "head_errors",
    "unmatched_head_errors",
)


def _whole_percent(value: float) -> str:
    return f"{Decimal(str(value)).quantize(Decimal('1'), rounding=ROUND_HALF_UP)}%"


def _summary_lines(table: RelationErrorTable) -> List[str]:
    lines = [
        f"excluded sentences: {table.excluded_sentences}/{table.total_sentences} "
        f"({table.excluded_share:.2f}%)",
        f"deprel errors on unmatched tokens: {table.unmatched_deprel_errors}/{table.deprel_errors} "
        f"({table.unmatched_deprel_error_share:.2f}%)",
    ]
    if table.unmatched_head_errors is not None:
        lines.append(
            f"head errors on unmatched tokens: {table.unmatched_head_errors}/{table.head_errors} "
            f"({table.unmatched_head_error_share:.2f}%)"
        )
    return lines


def _render_text(table: RelationErrorTable) -> str:
    width = max([len("deprel")] + [len(row.deprel) for row in table.rows])
    lines = [f"{'deprel':<{width}}  {'total':>5}  {'deprel':>6}  {'head':>6}"]
    for row in table.rows:
        lines.append(
            f"{row.deprel:<{width}}  {row.total:>5d}  "
            f"{_whole_percent(row.deprel_share):>6}  {_whole_percent(row.head_share):>6}"
        )
    if table.total_sentences:
        lines.append("")
        lines.extend(_summary_lines(table))
    return "\n".join(lines) + "\n"


def _render_tsv(table: RelationErrorTable) -> str:
    lines = []
    if table.total_sentences:
        for key in _COUNT_KEYS:
            value = getattr(table, key)
            if value is not None:
                lines.append(f"# {key}={value}")
    lines.append("\t".join(TSV_COLUMNS))
    for row in table.rows:
        lines.append(
            f"{row.deprel}\t{row.total}\t{row.deprel_correct}\t{row.head_correct}\t"
            f"{row.deprel_share:.2f}\t{row.head_share:.2f}"
        )
    return "\n".join(lines) + "\n"


_RENDERERS: Dict[str, Callable[[RelationErrorTable], str]] = {
    "text": _render_text,
    "tsv": _render_tsv,
}


def render_table(table: RelationErrorTable, fmt: str = "text") -> str:
    """
    Args:
        table: 错误表
        fmt: "text" 或 "tsv"

    Raises:
        AnalysisError: 未知格式
    """
    renderer = _RENDERERS.get(fmt)
    if renderer is None:
        raise AnalysisError(f"unknown table format '{fmt}' (expected one of {', '.join(TABLE_FORMATS)})")
    return renderer(table)


def parse_table_tsv(text: str) -> RelationErrorTable:
    counts: Dict[str, int] = {}
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line.lstrip("#").strip().partition("=")
            if key not in _COUNT_KEYS or not re.fullmatch(r"[0-9]+", value):
                raise AnalysisError(f"[line {lineno}] bad summary line: {line!r}")
            counts[key] = int(value)
            continue
        columns = line.split("\t")
        if tuple(columns) == TSV_COLUMNS:
            continue
        if len(columns) != len(TSV_COLUMNS):
            raise AnalysisError(f"[line {lineno}] expected {len(TSV_COLUMNS)} columns, got {len(columns)}")
        try:
            rows.append(RelationRow(columns[0], int(columns[1]), int(columns[2]), int(columns[3])))
        except ValueError as e:
            raise AnalysisError(f"[line {lineno}] non-numeric count: {line!r}") from e
    return RelationErrorTable(rows=tuple(rows), **counts)


__all__ = ['TABLE_FORMATS', 'TSV_COLUMNS', 'render_table', 'parse_table_tsv']
