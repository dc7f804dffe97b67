"""
形态词典 - 目标语言词形的词元和 UPOS

词典文件为 UTF-8 TSV: FORM  LEMMA  RAWTAG。同一词形的多行按分析器优先级排列,
查询时只取第一个分析。
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from src.core.errors import LexiconError
from src.core.morph.tagmap import TagMap, UNIVERSAL_TAGS, UNKNOWN_TAG
from src.utils.logger import get_logger

logger = get_logger(__name__)

# 分析器复合词元中的内部分隔符
COMPOUND_SEPARATORS = ("+", "#")


@dataclass(frozen=True)
class Analysis:
    """一个形态分析: 词元 + UPOS"""
    lemma: str
    upos: str

    def __post_init__(self):
        if not self.lemma:
            raise LexiconError("analysis lemma must be non-empty")
        if self.upos not in UNIVERSAL_TAGS:
            raise LexiconError(f"analysis tag '{self.upos}' is not a universal tag")


@dataclass(frozen=True)
class MorphLexicon:
    """词形 -> 按优先级排列的分析列表"""
    entries: Mapping[str, Tuple[Analysis, ...]] = field(default_factory=dict)
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for form, analyses in self.entries.items():
            if not analyses:
                raise LexiconError(f"lexicon entry '{form}' has no analyses")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, form: str) -> bool:
        return form in self.entries


def parse_lexicon(text: str, tag_map: TagMap) -> MorphLexicon:
    """
    解析词典文本

    Args:
        text: TSV 文本
        tag_map: 原始标签映射

    Returns:
        MorphLexicon(未映射的原始标签记为 "X" 并给出警告)
    """
    entries: Dict[str, List[Analysis]] = {}
    warnings: List[str] = []
    unmapped: Dict[str, int] = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        columns = line.split("\t")
        if len(columns) != 3:
            raise LexiconError(f"expected 3 tab-separated columns, got {len(columns)}", line=lineno)
        form, lemma, raw_tag = columns
        if not form or not lemma:
            raise LexiconError("empty FORM or LEMMA column", line=lineno)

        upos = tag_map.lookup(raw_tag)
        if upos is None:
            upos = UNKNOWN_TAG
            if raw_tag not in unmapped:
                unmapped[raw_tag] = lineno
                warnings.append(f"line {lineno}: raw tag '{raw_tag}' is not in the tag map, using X")

        if len(lemma) > 1 and any(sep in lemma for sep in COMPOUND_SEPARATORS):
            warnings.append(f"line {lineno}: lemma '{lemma}' contains a compound separator, kept verbatim")

        entries.setdefault(form, []).append(Analysis(lemma=lemma, upos=upos))

    for message in warnings:
        logger.warning(message)

    return MorphLexicon(
        entries={form: tuple(analyses) for form, analyses in entries.items()},
        warnings=tuple(warnings),
    )


def load_lexicon(path: Union[str, Path], tag_map: TagMap) -> MorphLexicon:
    """
    从文件加载词典

    Raises:
        LexiconError: 文件不可读或某行列数不为 3
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise LexiconError(f"cannot read lexicon {path}: {e}") from e
    lexicon = parse_lexicon(text, tag_map)
    logger.debug(f"词典已加载: {path} ({len(lexicon)} 个词形)")
    return lexicon


def first_analysis(lexicon: MorphLexicon, form: str) -> Analysis:
    """
    取词形的第一个分析

    查不到时用小写形式重试;仍查不到则返回 (form, "X")。
    """
    analyses = lexicon.entries.get(form)
    if analyses is None:
        analyses = lexicon.entries.get(form.lower())
    if analyses:
        return analyses[0]
    return Analysis(lemma=form or "_", upos=UNKNOWN_TAG)


def analyze_forms(lexicon: MorphLexicon, forms: Sequence[str]) -> List[Analysis]:
    """逐词调用 first_analysis"""
    return [first_analysis(lexicon, form) for form in forms]


__all__ = [
    'Analysis',
    'MorphLexicon',
    'parse_lexicon',
    'load_lexicon',
    'first_analysis',
    'analyze_forms',
    'COMPOUND_SEPARATORS',
]
