"""
原始分析器标签 -> Universal Dependencies UPOS 映射

映射表是 TSV 数据文件(RAWTAG  UPOS),默认表见 src/data/apertium_upos.tsv。
查找顺序: 完整原始标签 -> 首个标签成分(如 "<n><pl><gen>" 或 "n.pl.gen" 取 "n")。
"""
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Union

from src.core.errors import LexiconError

UNIVERSAL_TAGS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})
UNKNOWN_TAG = "X"

_LEADING_TAG = re.compile(r"^<?([^<>.+|\s]+)")


@dataclass(frozen=True)
class TagMap:
    """原始标签到 UPOS 的映射规则"""
    rules: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for raw, upos in self.rules.items():
            if upos not in UNIVERSAL_TAGS:
                raise LexiconError(f"tag map value '{upos}' for '{raw}' is not a universal tag")

    def __len__(self) -> int:
        return len(self.rules)

    def lookup(self, raw_tag: str) -> Optional[str]:
        """返回映射后的 UPOS,找不到时返回 None"""
        if raw_tag in self.rules:
            return self.rules[raw_tag]
        leading = _LEADING_TAG.match(raw_tag)
        if leading is not None:
            return self.rules.get(leading.group(1))
        return None


def parse_tag_map(text: str) -> TagMap:
    """解析 TSV 映射表,忽略空行和 "#" 注释行"""
    rules: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        columns = line.rstrip("\r").split("\t")
        if len(columns) != 2:
            raise LexiconError(f"tag map line needs 2 columns, got {len(columns)}", line=lineno)
        raw, upos = columns[0].strip(), columns[1].strip()
        if upos not in UNIVERSAL_TAGS:
            raise LexiconError(f"'{upos}' is not a universal tag", line=lineno)
        rules[raw] = upos
    return TagMap(rules)


def load_tag_map(path: Union[str, Path]) -> TagMap:
    """从文件加载映射表"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise LexiconError(f"cannot read tag map {path}: {e}") from e
    return parse_tag_map(text)


__all__ = ['TagMap', 'parse_tag_map', 'load_tag_map', 'UNIVERSAL_TAGS', 'UNKNOWN_TAG']
