"""
CoNLL-U 解析与序列化

使用方式:
    from src.core.conllu import parse_conllu, serialize_conllu

    treebank = parse_conllu(text)
    assert serialize_conllu(treebank) == text  # 规范格式的文件逐字节往返
"""
import re
from pathlib import Path
from typing import List, Optional, Set, Tuple, Union

from src.core.conllu.models import EMPTY, MultiwordSpan, Sentence, Token, Treebank
from src.core.errors import ConlluError

_DIGITS = re.compile(r"[0-9]+")


class _SentenceBuilder:
    """逐行累积一个句子,句子结束时统一做跨行检查"""

    def __init__(self, ordinal: int):
        self.ordinal = ordinal
        self.comments: List[str] = []
        self.rows: List[Tuple[int, List[str]]] = []
        self.spans: List[Tuple[int, MultiwordSpan]] = []
        self.ids: Set[int] = set()
        self.first_line: Optional[int] = None

    @property
    def has_content(self) -> bool:
        return bool(self.comments or self.rows)

    def error(self, message: str, line: Optional[int]) -> ConlluError:
        return ConlluError(message, sentence=self.ordinal, line=line)

    def add_comment(self, line: str, lineno: int) -> None:
        if self.rows or self.spans:
            raise self.error("comment line after token lines", lineno)
        self._mark(lineno)
        self.comments.append(line)

    def add_row(self, line: str, lineno: int) -> None:
        self._mark(lineno)
        columns = line.split("\t")
        if len(columns) != 10:
            raise self.error(f"expected 10 tab-separated columns, got {len(columns)}", lineno)

        raw_id = columns[0]
        if "." in raw_id:
            raise self.error(f"empty node id '{raw_id}' is not supported", lineno)
        if "-" in raw_id:
            self._add_span(columns, lineno)
            return

        if not _DIGITS.fullmatch(raw_id):
            raise self.error(f"non-numeric id '{raw_id}'", lineno)
        token_id = int(raw_id)
        if token_id in self.ids:
            raise self.error(f"duplicate id {token_id}", lineno)
        expected = len(self.rows) + 1
        if token_id != expected:
            raise self.error(f"unexpected id {token_id}, expected {expected}", lineno)

        raw_head = columns[6]
        if raw_head != EMPTY and not _DIGITS.fullmatch(raw_head):
            raise self.error(f"non-numeric head '{raw_head}'", lineno)
        self.ids.add(token_id)
        self.rows.append((lineno, columns))

    def _add_span(self, columns: List[str], lineno: int) -> None:
        start_text, _, end_text = columns[0].partition("-")
        if not (_DIGITS.fullmatch(start_text) and _DIGITS.fullmatch(end_text)):
            raise self.error(f"malformed range id '{columns[0]}'", lineno)
        start, end = int(start_text), int(end_text)
        if start >= end:
            raise self.error(f"range {columns[0]} must satisfy start < end", lineno)
        if start != len(self.rows) + 1:
            raise self.error(f"range {columns[0]} must directly precede token {start}", lineno)
        if any(value != EMPTY for value in columns[2:9]):
            raise self.error(f"range line {columns[0]} may only carry FORM and MISC", lineno)
        self.spans.append((lineno, MultiwordSpan(start=start, end=end, form=columns[1], misc=columns[9])))

    def _mark(self, lineno: int) -> None:
        if self.first_line is None:
            self.first_line = lineno

    def build(self) -> Sentence:
        if not self.rows:
            raise self.error("sentence has no token lines", self.first_line)

        n = len(self.rows)
        tokens = []
        for lineno, columns in self.rows:
            head = None if columns[6] == EMPTY else int(columns[6])
            token_id = int(columns[0])
            if head is not None and head > n:
                raise self.error(f"head out of range: token {token_id} has head {head} (n={n})", lineno)
            try:
                tokens.append(Token(
                    id=token_id,
                    form=columns[1],
                    lemma=columns[2],
                    upos=columns[3],
                    xpos=columns[4],
                    feats=columns[5],
                    head=head,
                    deprel=columns[7],
                    deps=columns[8],
                    misc=columns[9],
                ))
            except ConlluError as e:
                raise self.error(e.reason, lineno) from e

        last_end = 0
        for lineno, span in self.spans:
            if span.end > n:
                raise self.error(f"range {span.range_id} exceeds sentence length {n}", lineno)
            if span.start <= last_end:
                raise self.error(f"range {span.range_id} overlaps the previous range", lineno)
            last_end = span.end

        return Sentence(
            tokens=tuple(tokens),
            comments=tuple(self.comments),
            spans=tuple(span for _, span in self.spans),
        )


def parse_conllu(text: str) -> Treebank:
    """
    解析 CoNLL-U 文本

    Args:
        text: UTF-8 解码后的文本,句子之间以空行分隔

    Returns:
        Treebank(保留注释行和多词范围;HEAD 为 "_" 时解析为未标注)

    Raises:
        ConlluError: 列数错误、非数字 id/head、head 越界、重复 id 等,
                     错误信息带句子序号和行号
    """
    sentences: List[Sentence] = []
    builder = _SentenceBuilder(ordinal=1)

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            if builder.has_content:
                sentences.append(builder.build())
                builder = _SentenceBuilder(ordinal=len(sentences) + 1)
            continue
        if line.startswith("#"):
            builder.add_comment(line, lineno)
        else:
            builder.add_row(line, lineno)

    if builder.has_content:
        sentences.append(builder.build())

    return Treebank(tuple(sentences))


def serialize_sentence(sentence: Sentence) -> str:
    """单句序列化,以一个空行结尾"""
    lines = list(sentence.comments)
    spans_by_start = {span.start: span for span in sentence.spans}
    for token in sentence.tokens:
        span = spans_by_start.get(token.id)
        if span is not None:
            lines.append("\t".join(span.to_columns()))
        lines.append("\t".join(token.to_columns()))
    return "\n".join(lines) + "\n\n"


def serialize_conllu(treebank: Treebank) -> str:
    """
    序列化为规范 CoNLL-U 文本

    空树库返回空字符串;parse_conllu(serialize_conllu(tb)) == tb
    """
    return "".join(serialize_sentence(sentence) for sentence in treebank)


def read_treebank(path: Union[str, Path]) -> Treebank:
    """从文件读取 CoNLL-U 树库"""
    return parse_conllu(Path(path).read_text(encoding="utf-8"))


def write_treebank(treebank: Treebank, path: Union[str, Path]) -> None:
    """写出 CoNLL-U 树库(必要时创建父目录)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_conllu(treebank), encoding="utf-8", newline="\n")


__all__ = [
    'parse_conllu',
    'serialize_conllu',
    'serialize_sentence',
    'read_treebank',
    'write_treebank',
]
