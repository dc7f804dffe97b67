"""树库评测服务"""
from src.services.evaluation.scorer import (
    SpanWord,
    MetricScore,
    EvalReport,
    METRICS,
    METRIC_LABELS,
    to_percent,
    sentence_spans,
    sentence_text,
    align_words,
    score_sentence,
    score,
)
from src.services.evaluation.effort import EffortReport, effort_report
from src.services.evaluation.report import (
    TSV_HEADER,
    format_report_text,
    format_report_tsv,
    format_effort_text,
)

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
    'EffortReport',
    'effort_report',
    'TSV_HEADER',
    'format_report_text',
    'format_report_tsv',
    'format_effort_text',
]
