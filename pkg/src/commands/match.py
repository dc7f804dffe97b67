"""
match 子命令(调试) - 打印每行对齐的最大匹配及其大小

句长取自 --counts 文件(每行 "n_src n_tgt");不给时按该行最大下标推断。
"""
import re
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel

from src.core.alignment import format_matching, maximum_matching, parse_pairs, parse_pharaoh, read_alignment_lines
from src.core.commands import BaseCommand, CommandResult
from src.core.errors import AlignmentError


class MatchArgs(BaseModel):
    alignments: Path
    counts: Optional[Path] = None


def read_counts(path: Path) -> List[Tuple[int, int]]:
    counts = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        fields = line.split()
        if len(fields) != 2 or not all(re.fullmatch(r"[0-9]+", field) for field in fields):
            raise AlignmentError(f"[line {lineno}] expected 'n_src n_tgt', got {line!r}")
        counts.append((int(fields[0]), int(fields[1])))
    return counts


def _inferred_counts(line: str) -> Tuple[int, int]:
    pairs = parse_pairs(line)
    if not pairs:
        return 0, 0
    return max(s for s, _ in pairs) + 1, max(t for _, t in pairs) + 1


class MatchCommand(BaseCommand):
    name = "match"
    description = "打印每行 Pharaoh 对齐的最大匹配(调试对齐器用)"
    category = "debug"
    args_schema = MatchArgs

    def add_arguments(self, parser) -> None:
        parser.add_argument("alignments", help="Pharaoh 对齐文件")
        parser.add_argument("--counts", help="每行 'n_src n_tgt' 的句长文件")

    def execute(self, alignments: Path, counts: Optional[Path] = None) -> CommandResult:
        lines = read_alignment_lines(alignments)
        sizes = read_counts(counts) if counts is not None else [_inferred_counts(line) for line in lines]
        if len(sizes) != len(lines):
            raise AlignmentError(f"{len(lines)} alignment lines but {len(sizes)} count lines")

        output = []
        cardinalities = []
        for lineno, (line, (n_src, n_tgt)) in enumerate(zip(lines, sizes), start=1):
            matching = maximum_matching(parse_pharaoh(line, n_src, n_tgt))
            cardinalities.append(len(matching))
            output.append(f"{lineno}\t{len(matching)}\t{format_matching(matching)}")

        return CommandResult(
            success=True,
            output="\n".join(output),
            metadata={"sizes": cardinalities},
        )


__all__ = ['MatchCommand', 'MatchArgs', 'read_counts']
