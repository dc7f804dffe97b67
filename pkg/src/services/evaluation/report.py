"""
评测结果输出 - 终端文本表格与 TSV

文本表格不含颜色码,着色由命令层负责。
"""
from typing import List

from src.services.evaluation.effort import EffortReport
from src.services.evaluation.scorer import METRIC_LABELS, EvalReport

TSV_HEADER = ("metric", "precision", "recall", "f1", "correct", "gold_total", "system_total")


def format_report_text(report: EvalReport) -> str:
    """
    Metric     | Precision |    Recall |  F1 Score | Correct |  Gold | System
    -----------+-----------+-----------+-----------+---------+-------+-------
    UAS        |     80.00 |     80.00 |     80.00 |       4 |     5 |      5
    """
    lines = [
        "Metric     | Precision |    Recall |  F1 Score | Correct |  Gold | System",
        "-----------+-----------+-----------+-----------+---------+-------+-------",
    ]
    for name, metric in report.metrics():
        lines.append(
            f"{METRIC_LABELS[name]:<10} | {metric.precision:9.2f} | {metric.recall:9.2f} | "
            f"{metric.f1:9.2f} | {metric.correct:7d} | {metric.gold_total:5d} | {metric.system_total:6d}"
        )
    if report.excluded:
        ordinals = ", ".join(str(o) for o in report.excluded)
        lines.append(
            f"excluded: {len(report.excluded)}/{report.sentences} sentences "
            f"({report.excluded_share:.2f}%) [{ordinals}]"
        )
    return "\n".join(lines)


def format_report_tsv(report: EvalReport) -> str:
    lines = ["\t".join(TSV_HEADER)]
    for name, metric in report.metrics():
        lines.append("\t".join([
            name,
            f"{metric.precision:.2f}",
            f"{metric.recall:.2f}",
            f"{metric.f1:.2f}",
            str(metric.correct),
            str(metric.gold_total),
            str(metric.system_total),
        ]))
    return "\n".join(lines) + "\n"


_EFFORT_LABELS = {
    "arcs_to_remove": "arcs to remove",
    "arcs_to_add": "arcs to add",
    "labels_to_fix": "labels to fix",
    "tags_to_fix": "UPOS tags to fix",
    "lemmas_to_fix": "lemmas to fix",
    "tokens_to_add": "tokens to add",
    "tokens_to_remove": "tokens to remove",
}


def format_effort_text(effort: EffortReport) -> str:
    lines: List[str] = ["Correction effort"]
    for key, value in effort.to_dict().items():
        lines.append(f"  {_EFFORT_LABELS[key]:<18} {value:>6d}")
    return "\n".join(lines)


__all__ = ['TSV_HEADER', 'format_report_text', 'format_report_tsv', 'format_effort_text']
