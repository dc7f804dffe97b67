"""
来源标记文件(TSV)与错误清单的读写

格式:
    # merge_mode=union
    # root_order=filter-first
    sentence	token	flag
    # sentence=1 matched=0 unmatched=1 forced=1 root_case=single root_tier=-
    1	1	forced-root
    1	2	unmatched-fallback

每句的统计行以 "# sentence=" 开头,紧接在该句的标记行之前。
"""
import re
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from src.core.errors import ProjectorError
from src.services.projection.projector import (
    ProjectionOutcome,
    Provenance,
    SentenceFailure,
    SentenceReport,
)
from src.services.projection.root import RootCase

ProvenanceMap = Dict[Tuple[int, int], Provenance]

HEADER = ("sentence", "token", "flag")

REPORT_KEYS = ("sentence", "matched", "unmatched", "forced", "root_case", "root_tier")
NO_TIER = "-"
_DIGITS = re.compile(r"[0-9]+")


# ========== 单句统计行 ==========

def format_sentence_report(report: SentenceReport) -> str:
    tier = NO_TIER if report.root_tier is None else str(report.root_tier)
    values = (report.ordinal, report.matched, report.unmatched, report.forced, report.root_case.value, tier)
    return "# " + " ".join(f"{key}={value}" for key, value in zip(REPORT_KEYS, values))


def parse_sentence_report(body: str, lineno: int = 0) -> SentenceReport:
    """
    解析 "sentence=1 matched=4 ... root_tier=-"(已去掉开头的 #)

    Raises:
        ProjectorError: 键不全、计数不是非负整数或根节点分支未知
    """
    fields = dict(part.partition("=")[::2] for part in body.split())
    if tuple(fields) != REPORT_KEYS:
        raise ProjectorError(f"[line {lineno}] malformed sentence report: {body!r}")
    counts = [fields[key] for key in REPORT_KEYS[:4]]
    tier = fields["root_tier"]
    if not all(_DIGITS.fullmatch(value) for value in counts):
        raise ProjectorError(f"[line {lineno}] sentence report counts must be integers: {body!r}")
    if tier != NO_TIER and not _DIGITS.fullmatch(tier):
        raise ProjectorError(f"[line {lineno}] bad root_tier '{tier}'")
    try:
        root_case = RootCase(fields["root_case"])
    except ValueError as e:
        raise ProjectorError(f"[line {lineno}] unknown root_case '{fields['root_case']}'") from e
    ordinal, matched, unmatched, forced = (int(value) for value in counts)
    return SentenceReport(
        ordinal=ordinal,
        matched=matched,
        unmatched=unmatched,
        forced=forced,
        root_case=root_case,
        root_tier=None if tier == NO_TIER else int(tier),
    )


# ========== 来源标记 ==========

def format_provenance(outcome: ProjectionOutcome, metadata: Optional[Mapping[str, str]] = None) -> str:
    """
    生成来源标记 TSV

    Args:
        outcome: 投射结果
        metadata: 额外写入头部的 key=value(默认取投射开关)
    """
    lines = [f"# {key}={value}" for key, value in (metadata or outcome.options.metadata()).items()]
    lines.append("\t".join(HEADER))
    for (ordinal, result), report in zip(outcome.results, outcome.reports):
        lines.append(format_sentence_report(report))
        for token, flag in zip(result.sentence.tokens, result.provenance):
            lines.append(f"{ordinal}\t{token.id}\t{flag.value}")
    return "\n".join(lines) + "\n"


def parse_provenance(text: str) -> Tuple[ProvenanceMap, Dict[str, str], List[SentenceReport]]:
    """
    解析来源标记 TSV

    Returns:
        ((句子序号, token id) -> 标记, 头部元数据, 单句统计)
    """
    flags: ProvenanceMap = {}
    metadata: Dict[str, str] = {}
    reports: List[SentenceReport] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("sentence="):
                reports.append(parse_sentence_report(body, lineno))
                continue
            key, _, value = body.partition("=")
            metadata[key.strip()] = value.strip()
            continue
        columns = line.split("\t")
        if tuple(columns) == HEADER:
            continue
        if len(columns) != 3 or not _DIGITS.fullmatch(columns[0]) or not _DIGITS.fullmatch(columns[1]):
            raise ProjectorError(f"[line {lineno}] malformed provenance row: {line!r}")
        try:
            flag = Provenance(columns[2])
        except ValueError as e:
            raise ProjectorError(f"[line {lineno}] unknown provenance flag '{columns[2]}'") from e
        flags[(int(columns[0]), int(columns[1]))] = flag
    return flags, metadata, reports


def read_provenance(path: Union[str, Path]) -> ProvenanceMap:
    flags, _, _ = parse_provenance(Path(path).read_text(encoding="utf-8"))
    return flags


def write_provenance(outcome: ProjectionOutcome, path: Union[str, Path], metadata: Optional[Mapping[str, str]] = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_provenance(outcome, metadata), encoding="utf-8", newline="\n")


def format_failures(failures: List[SentenceFailure]) -> str:
    """错误清单: sentence<TAB>error"""
    lines = ["sentence\terror"]
    lines.extend(f"{failure.ordinal}\t{failure.message}" for failure in failures)
    return "\n".join(lines) + "\n"


def write_failures(failures: List[SentenceFailure], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_failures(failures), encoding="utf-8", newline="\n")


__all__ = [
    'ProvenanceMap',
    'format_sentence_report',
    'parse_sentence_report',
    'format_provenance',
    'parse_provenance',
    'read_provenance',
    'write_provenance',
    'format_failures',
    'write_failures',
]
