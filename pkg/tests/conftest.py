"""
测试共用 fixtures

使用方式:
    pytest tests/
"""
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pytest

# 添加项目根目录到路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.conllu import Sentence, Token, Treebank  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

UPOS_POOL = ("NOUN", "VERB", "ADJ", "ADV", "PRON", "PUNCT", "NUM")
DEPREL_POOL = ("nsubj", "obj", "obl", "obl:cau", "nmod", "nmod:poss", "amod", "advmod", "punct")


def tree_heads(rng: random.Random, n: int) -> List[int]:
    """随机生成一棵 n 个节点的树的 head 列表(1 起)"""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = [0] * n
    for index, node in enumerate(order[1:], start=1):
        heads[node - 1] = order[rng.randrange(index)]
    return heads


def random_sentence(rng: random.Random, n: int, forms: Optional[Sequence[str]] = None) -> Sentence:
    """随机注释的合法句子"""
    if forms is None:
        forms = ["".join(rng.choice("abcdeжык") for _ in range(rng.randint(1, 4))) for _ in range(n)]
    heads = tree_heads(rng, n)
    tokens = []
    for i, (form, head) in enumerate(zip(forms, heads), start=1):
        tokens.append(Token(
            id=i,
            form=form,
            lemma=rng.choice([form, form.upper(), "_"]),
            upos=rng.choice(UPOS_POOL),
            head=head,
            deprel="root" if head == 0 else rng.choice(DEPREL_POOL),
        ))
    return Sentence(tokens=tuple(tokens))


def build_sentence(rows: Sequence[Tuple], comments: Sequence[str] = ()) -> Sentence:
    """
    由 (form, upos, head, deprel) 或 (form, lemma, upos, head, deprel) 元组构建句子
    """
    tokens = []
    for i, row in enumerate(rows, start=1):
        if len(row) == 4:
            form, upos, head, deprel = row
            lemma = form.lower()
        else:
            form, lemma, upos, head, deprel = row
        tokens.append(Token(id=i, form=form, lemma=lemma, upos=upos, head=head, deprel=deprel))
    return Sentence(tokens=tuple(tokens), comments=tuple(comments))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240501)


@pytest.fixture
def kyrgyz_source() -> Sentence:
    """Hayvanlar kapının yanında duruyordu ."""
    return build_sentence([
        ("Hayvanlar", "hayvan", "NOUN", 4, "nsubj"),
        ("kapının", "kapı", "NOUN", 3, "nmod:poss"),
        ("yanında", "yan", "ADJ", 4, "obl"),
        ("duruyordu", "dur", "VERB", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ])


@pytest.fixture
def kyrgyz_target() -> List[str]:
    return ["Жаныбарлар", "эшиктин", "жанында", "турушту", "."]


@pytest.fixture
def random_treebank():
    """工厂: random_treebank(rng, size) -> Treebank"""
    def factory(rng: random.Random, size: int, max_len: int = 8) -> Treebank:
        return Treebank(tuple(random_sentence(rng, rng.randint(1, max_len)) for _ in range(size)))
    return factory
