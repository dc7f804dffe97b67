"""
树库评测 - Words / Lemmas / UPOS / UAS / LAS 的精确率、召回率、F1

词对齐按字符区间: 把每句的词形去掉空白后拼接,两个词当且仅当区间完全相同时对齐,
因此 gold 与 system 分词不同也能评测。多词范围行不参与,只评句法词。
"""
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction
from typing import Dict, List, Tuple

from src.core.conllu import Sentence, Token, Treebank
from src.core.errors import EvaluationError, TextMismatchError
from src.utils.logger import get_logger

logger = get_logger(__name__)

METRICS = ("words", "lemmas", "upos", "uas", "las")
METRIC_LABELS = {
    "words": "Words",
    "lemmas": "Lemmas",
    "upos": "UPOS",
    "uas": "UAS",
    "las": "LAS",
}

_CENT = Decimal("0.01")


def to_percent(ratio: Fraction) -> float:
    """比例 -> 百分数,两位小数,四舍五入(half-up)"""
    value = Decimal(100 * ratio.numerator) / Decimal(ratio.denominator)
    return float(value.quantize(_CENT, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class SpanWord:
    """去空白文本中的字符区间 [start, end)"""
    start: int
    end: int
    token: Token

    def __post_init__(self):
        if not self.start < self.end:
            raise EvaluationError(f"token {self.token.id} has an empty character span")

    @property
    def span(self) -> Tuple[int, int]:
        return self.start, self.end


@dataclass(frozen=True)
class MetricScore:
    """一个指标的计数;百分比由计数精确推出"""
    correct: int = 0
    gold_total: int = 0
    system_total: int = 0

    def __post_init__(self):
        if self.correct > min(self.gold_total, self.system_total):
            raise EvaluationError(
                f"correct={self.correct} exceeds min(gold={self.gold_total}, system={self.system_total})"
            )

    def __add__(self, other: "MetricScore") -> "MetricScore":
        return MetricScore(
            self.correct + other.correct,
            self.gold_total + other.gold_total,
            self.system_total + other.system_total,
        )

    @property
    def precision_ratio(self) -> Fraction:
        return Fraction(self.correct, self.system_total) if self.system_total else Fraction(0)

    @property
    def recall_ratio(self) -> Fraction:
        return Fraction(self.correct, self.gold_total) if self.gold_total else Fraction(0)

    @property
    def f1_ratio(self) -> Fraction:
        p, r = self.precision_ratio, self.recall_ratio
        return 2 * p * r / (p + r) if p + r else Fraction(0)

    @property
    def precision(self) -> float:
        return to_percent(self.precision_ratio)

    @property
    def recall(self) -> float:
        return to_percent(self.recall_ratio)

    @property
    def f1(self) -> float:
        return to_percent(self.f1_ratio)


@dataclass(frozen=True)
class EvalReport:
    """
    五个指标 + 因文本不一致被排除的句子(序号从 1 开始)
    """
    words: MetricScore = MetricScore()
    lemmas: MetricScore = MetricScore()
    upos: MetricScore = MetricScore()
    uas: MetricScore = MetricScore()
    las: MetricScore = MetricScore()
    excluded: Tuple[int, ...] = ()
    sentences: int = 0

    def metrics(self) -> List[Tuple[str, MetricScore]]:
        return [(name, getattr(self, name)) for name in METRICS]

    @property
    def excluded_share(self) -> float:
        if not self.sentences:
            return 0.0
        return to_percent(Fraction(len(self.excluded), self.sentences))


def _strip_space(form: str) -> str:
    return "".join(ch for ch in form if not ch.isspace())


def sentence_spans(sentence: Sentence) -> List[SpanWord]:
    """每个句法词在去空白文本中的区间"""
    spans = []
    offset = 0
    for token in sentence.tokens:
        start = offset
        offset += len(_strip_space(token.form))
        spans.append(SpanWord(start, offset, token))
    return spans


def sentence_text(sentence: Sentence) -> str:
    return "".join(_strip_space(token.form) for token in sentence.tokens)


def align_words(gold: Sentence, system: Sentence) -> List[Tuple[Token, Token]]:
    """
    按字符区间对齐两句的词

    Returns:
        (gold_token, system_token) 对,只含区间完全相同的词

    Raises:
        TextMismatchError: 去空白后的文本不同
    """
    gold_text, system_text = sentence_text(gold), sentence_text(system)
    if gold_text != system_text:
        raise TextMismatchError(f"text mismatch: gold {gold_text!r} vs system {system_text!r}")

    gold_spans, system_spans = sentence_spans(gold), sentence_spans(system)
    pairs = []
    g = s = 0
    while g < len(gold_spans) and s < len(system_spans):
        gold_word, system_word = gold_spans[g], system_spans[s]
        if gold_word.span == system_word.span:
            pairs.append((gold_word.token, system_word.token))
            g += 1
            s += 1
        elif gold_word.end < system_word.end:
            g += 1
        elif system_word.end < gold_word.end:
            s += 1
        else:
            g += 1
            s += 1
    return pairs


def _attachment_correct(gold_token: Token, system_token: Token, aligned: Dict[int, int]) -> bool:
    if gold_token.head is None or system_token.head is None:
        return False
    if gold_token.head == 0 or system_token.head == 0:
        return gold_token.head == system_token.head
    return aligned.get(gold_token.head) == system_token.head


def score_sentence(gold: Sentence, system: Sentence) -> EvalReport:
    """单句计数;跨句汇总见 score()"""
    pairs = align_words(gold, system)
    aligned = {gold_token.id: system_token.id for gold_token, system_token in pairs}

    lemmas = upos = uas = las = 0
    for gold_token, system_token in pairs:
        lemmas += gold_token.lemma == system_token.lemma
        upos += gold_token.upos == system_token.upos
        if _attachment_correct(gold_token, system_token, aligned):
            uas += 1
            las += gold_token.deprel == system_token.deprel

    n_gold, n_system = len(gold), len(system)
    return EvalReport(
        words=MetricScore(len(pairs), n_gold, n_system),
        lemmas=MetricScore(lemmas, n_gold, n_system),
        upos=MetricScore(upos, n_gold, n_system),
        uas=MetricScore(uas, n_gold, n_system),
        las=MetricScore(las, n_gold, n_system),
        sentences=1,
    )


def score(gold: Treebank, system: Treebank) -> EvalReport:
    """
    评测 system 树库

    Args:
        gold: gold 树库
        system: 待评测树库,与 gold 按位置一一对应

    Returns:
        EvalReport;文本不一致或含空白词形的句子不计入任何指标,序号记在 excluded 中

    Raises:
        EvaluationError: 句子数不同
    """
    if len(gold) != len(system):
        raise EvaluationError(f"sentence counts differ: gold={len(gold)}, system={len(system)}")

    totals = {name: MetricScore() for name in METRICS}
    excluded = []
    for ordinal, (gold_sentence, system_sentence) in enumerate(zip(gold, system), start=1):
        try:
            counts = score_sentence(gold_sentence, system_sentence)
        except EvaluationError as e:
            # 文本不一致,或有只含空白的词形
            logger.warning(f"第 {ordinal} 句被排除: {e}")
            excluded.append(ordinal)
            continue
        for name in METRICS:
            totals[name] = totals[name] + getattr(counts, name)

    return EvalReport(**totals, excluded=tuple(excluded), sentences=len(gold))


__all__ = [
    'SpanWord',
    'MetricScore',
    'EvalReport',
    'METRICS',
    'METRIC_LABELS',
    'to_percent',
    'sentence_spans',
    'sentence_text',
    'align_words',
    'score_sentence',
    'score',
]
