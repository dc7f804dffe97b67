"""
CoNLL-U 数据结构 - Token / MultiwordSpan / Sentence / Treebank

所有对象构造后不可变,可以安全地跨线程共享。
"""
from dataclasses import dataclass, field, replace
from typing import Iterator, List, Optional, Tuple

from src.core.errors import ConlluError

# CoNLL-U 列顺序
COLUMNS = ("id", "form", "lemma", "upos", "xpos", "feats", "head", "deprel", "deps", "misc")
EMPTY = "_"


@dataclass(frozen=True)
class Token:
    """CoNLL-U 的一行(句法词)"""
    id: int
    form: str
    lemma: str = EMPTY
    upos: str = EMPTY
    xpos: str = EMPTY
    feats: str = EMPTY
    head: Optional[int] = None  # None = 未标注("_"),0 = 句子根
    deprel: str = EMPTY
    deps: str = EMPTY
    misc: str = EMPTY

    def __post_init__(self):
        if self.id < 1:
            raise ConlluError(f"token id must be >= 1, got {self.id}")
        if not self.form:
            raise ConlluError(f"token {self.id} has an empty form")
        if self.head is not None:
            if self.head < 0:
                raise ConlluError(f"token {self.id} has a negative head {self.head}")
            if self.head == self.id:
                raise ConlluError(f"token {self.id} is its own head")

    @property
    def is_root(self) -> bool:
        return self.head == 0

    def to_columns(self) -> List[str]:
        """按 CoNLL-U 列顺序输出 10 个字段"""
        return [
            str(self.id),
            self.form,
            self.lemma,
            self.upos,
            self.xpos,
            self.feats,
            EMPTY if self.head is None else str(self.head),
            self.deprel,
            self.deps,
            self.misc,
        ]

    def with_fields(self, **changes) -> "Token":
        return replace(self, **changes)


@dataclass(frozen=True)
class MultiwordSpan:
    """多词 token 的范围行 "n-m" """
    start: int
    end: int
    form: str
    misc: str = EMPTY

    def __post_init__(self):
        if not self.start < self.end:
            raise ConlluError(f"multiword range {self.start}-{self.end} must satisfy start < end")

    @property
    def range_id(self) -> str:
        return f"{self.start}-{self.end}"

    def to_columns(self) -> List[str]:
        return [self.range_id, self.form] + [EMPTY] * 7 + [self.misc]


@dataclass(frozen=True)
class Sentence:
    """
    一个句子: 注释行 + token 序列 + 多词范围

    Args:
        comments: 原样保存的 "#" 注释行
        tokens: id 严格为 1..n
        spans: 多词范围,两端 id 必须存在
    """
    tokens: Tuple[Token, ...]
    comments: Tuple[str, ...] = ()
    spans: Tuple[MultiwordSpan, ...] = ()

    def __post_init__(self):
        # 允许传入 list,统一转为 tuple 以保证不可变
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "comments", tuple(self.comments))
        object.__setattr__(self, "spans", tuple(self.spans))

        for expected, token in enumerate(self.tokens, start=1):
            if token.id != expected:
                raise ConlluError(f"token ids must be 1..n in order: expected {expected}, got {token.id}")
        n = len(self.tokens)
        for token in self.tokens:
            if token.head is not None and token.head > n:
                raise ConlluError(f"head out of range: token {token.id} has head {token.head} (n={n})")
        for span in self.spans:
            if span.end > n:
                raise ConlluError(f"multiword range {span.range_id} exceeds sentence length {n}")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    @property
    def forms(self) -> List[str]:
        return [token.form for token in self.tokens]

    @property
    def heads(self) -> List[Optional[int]]:
        return [token.head for token in self.tokens]

    @property
    def upos_tags(self) -> List[str]:
        return [token.upos for token in self.tokens]

    @property
    def root_ids(self) -> List[int]:
        return [token.id for token in self.tokens if token.head == 0]

    def metadata(self, key: str) -> Optional[str]:
        """读取 "# key = value" 形式的注释值"""
        for line in self.comments:
            name, sep, value = line.lstrip("#").partition("=")
            if sep and name.strip() == key:
                return value.strip()
        return None

    @property
    def sent_id(self) -> Optional[str]:
        return self.metadata("sent_id")

    @property
    def text(self) -> Optional[str]:
        return self.metadata("text")


@dataclass(frozen=True)
class Treebank:
    """有序句子集合"""
    sentences: Tuple[Sentence, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[Sentence]:
        return iter(self.sentences)

    def __getitem__(self, index: int) -> Sentence:
        return self.sentences[index]

    def __add__(self, other: "Treebank") -> "Treebank":
        return Treebank(self.sentences + other.sentences)

    @property
    def token_count(self) -> int:
        return sum(len(sentence) for sentence in self.sentences)


__all__ = ['Token', 'MultiwordSpan', 'Sentence', 'Treebank', 'COLUMNS', 'EMPTY']
