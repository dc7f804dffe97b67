"""
注释投射 - 把源句的依存注释经由对齐匹配转移到目标句

单句流程:
    1. 解析根节点(可选先做词性过滤,见 RootOrder)
    2. 最大匹配 + 强制加入根节点对
    3. 逐词转移字段并重映射 HEAD
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.alignment import (
    AlignmentGraph,
    Matching,
    filter_by_pos,
    maximum_matching,
    merge_graphs,
    parse_pharaoh,
)
from src.core.config.options import MergeMode, RootOrder, UposSource
from src.core.conllu import EMPTY, Sentence, Token, Treebank, validate_tree
from src.core.errors import ProjectionError, ProjectorError
from src.core.morph import Analysis, MorphLexicon, analyze_forms
from src.services.projection.root import RootCase, resolve_root
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Provenance(str, Enum):
    """目标词注释的来源"""
    MATCHED = "matched"
    UNMATCHED = "unmatched-fallback"
    FORCED_ROOT = "forced-root"


@dataclass(frozen=True)
class ProjectionOptions:
    """投射开关(与 PipelineConfig 中的同名字段对应)"""
    merge_mode: MergeMode = MergeMode.UNION
    swap_direction: bool = False
    root_order: RootOrder = RootOrder.FILTER_FIRST
    upos_source: UposSource = UposSource.PROJECTED
    workers: int = 1

    def metadata(self) -> Dict[str, str]:
        """写入来源标记文件头部的开关记录"""
        return {
            "merge_mode": MergeMode(self.merge_mode).value,
            "swap_direction": str(self.swap_direction).lower(),
            "root_order": RootOrder(self.root_order).value,
            "upos_source": UposSource(self.upos_source).value,
        }


@dataclass(frozen=True)
class ProjectionInput:
    """
    单句投射输入

    Args:
        src: 已句法分析的源句
        tgt_forms: 目标句词形
        graph: 对齐图(filter-first 时为过滤后的图)
        tgt_analyses: 每个目标词的形态分析
    """
    src: Sentence
    tgt_forms: Tuple[str, ...]
    graph: AlignmentGraph
    tgt_analyses: Tuple[Analysis, ...]

    def __post_init__(self):
        object.__setattr__(self, "tgt_forms", tuple(self.tgt_forms))
        object.__setattr__(self, "tgt_analyses", tuple(self.tgt_analyses))
        if self.graph.n_src != len(self.src):
            raise ProjectionError(f"graph has {self.graph.n_src} source positions, sentence has {len(self.src)}")
        if self.graph.n_tgt != len(self.tgt_forms):
            raise ProjectionError(f"graph has {self.graph.n_tgt} target positions, got {len(self.tgt_forms)} forms")
        if len(self.tgt_analyses) != len(self.tgt_forms):
            raise ProjectionError(f"got {len(self.tgt_analyses)} analyses for {len(self.tgt_forms)} forms")


@dataclass(frozen=True)
class ProjectionResult:
    """单句投射结果"""
    sentence: Sentence
    provenance: Tuple[Provenance, ...]
    matching: Matching
    root_case: RootCase
    root_tier: Optional[int] = None

    def count(self, flag: Provenance) -> int:
        return sum(1 for item in self.provenance if item is flag)


@dataclass(frozen=True)
class SentenceReport:
    """来源统计的一行"""
    ordinal: int
    matched: int
    unmatched: int
    forced: int
    root_case: RootCase
    root_tier: Optional[int]


@dataclass(frozen=True)
class SentenceFailure:
    ordinal: int
    message: str


@dataclass
class ProjectionOutcome:
    """整个树库的投射结果: 成功的句子按输入顺序排列,失败的句子单独记录"""
    results: List[Tuple[int, ProjectionResult]] = field(default_factory=list)
    failures: List[SentenceFailure] = field(default_factory=list)
    options: ProjectionOptions = field(default_factory=ProjectionOptions)

    @property
    def treebank(self) -> Treebank:
        return Treebank(tuple(result.sentence for _, result in self.results))

    @property
    def reports(self) -> List[SentenceReport]:
        return [
            SentenceReport(
                ordinal=ordinal,
                matched=result.count(Provenance.MATCHED),
                unmatched=result.count(Provenance.UNMATCHED),
                forced=result.count(Provenance.FORCED_ROOT),
                root_case=result.root_case,
                root_tier=result.root_tier,
            )
            for ordinal, result in self.results
        ]

    @property
    def success(self) -> bool:
        return not self.failures


def _target_comments(src: Sentence, forms: Sequence[str]) -> Tuple[str, ...]:
    comments = []
    if src.sent_id is not None:
        comments.append(f"# sent_id = {src.sent_id}")
    comments.append(f"# text = {' '.join(forms)}")
    return tuple(comments)


def project_sentence(
    projection_input: ProjectionInput,
    options: ProjectionOptions = ProjectionOptions(),
) -> ProjectionResult:
    """
    把源句注释投射到目标句

    除 id / FORM / LEMMA 外,匹配词的字段都来自对应源词;DEPS 清空为 "_"。
    未匹配的词挂到根节点上,DEPREL 为 "_",UPOS 取自形态词典。

    Args:
        projection_input: 单句输入
        options: 投射开关;root-first 时在根节点解析之后再做词性过滤

    Returns:
        ProjectionResult,句子一定通过 validate_tree

    Raises:
        ProjectionError: 源句不是合法的树(无根 / 多根 / 有环 / head 未标注)
    """
    src = projection_input.src
    problems = validate_tree(src)
    if problems:
        raise ProjectionError(
            "source sentence is not a valid tree: " + "; ".join(str(p) for p in problems)
        )

    src_upos = src.upos_tags
    tgt_upos = [analysis.upos for analysis in projection_input.tgt_analyses]

    resolution = resolve_root(src, projection_input.graph, tgt_upos)
    graph = resolution.graph
    if RootOrder(options.root_order) is RootOrder.ROOT_FIRST:
        graph = filter_by_pos(graph, src_upos, tgt_upos)

    matching = maximum_matching(graph).with_pair(*resolution.root_pair)
    src_to_tgt = matching.src_to_tgt
    tgt_to_src = matching.tgt_to_src
    root_position = resolution.target_position
    root_id = root_position + 1
    use_lexicon_upos = UposSource(options.upos_source) is UposSource.LEXICON

    tokens: List[Token] = []
    provenance: List[Provenance] = []
    for position, (form, analysis) in enumerate(
        zip(projection_input.tgt_forms, projection_input.tgt_analyses)
    ):
        src_position = tgt_to_src.get(position)
        if src_position is None:
            tokens.append(Token(
                id=position + 1,
                form=form,
                lemma=analysis.lemma,
                upos=analysis.upos,
                head=root_id,
                deprel=EMPTY,
            ))
            provenance.append(Provenance.UNMATCHED)
            continue

        source = src.tokens[src_position]
        if source.head == 0:
            head = 0
        else:
            head_position = src_to_tgt.get(source.head - 1)
            head = root_id if head_position is None else head_position + 1

        tokens.append(Token(
            id=position + 1,
            form=form,
            lemma=analysis.lemma,
            upos=analysis.upos if use_lexicon_upos else source.upos,
            xpos=source.xpos,
            feats=source.feats,
            head=head,
            deprel=source.deprel,
            deps=EMPTY,
            misc=source.misc,
        ))
        provenance.append(Provenance.FORCED_ROOT if position == root_position else Provenance.MATCHED)

    sentence = Sentence(
        tokens=tuple(tokens),
        comments=_target_comments(src, projection_input.tgt_forms),
    )
    problems = validate_tree(sentence)
    if problems:
        raise ProjectionError(
            "projected sentence is not a valid tree: " + "; ".join(str(p) for p in problems)
        )

    return ProjectionResult(
        sentence=sentence,
        provenance=tuple(provenance),
        matching=matching,
        root_case=resolution.case,
        root_tier=resolution.tier,
    )


def build_graph(
    line: str,
    n_src: int,
    n_tgt: int,
    options: ProjectionOptions,
    reverse_line: Optional[str] = None,
) -> AlignmentGraph:
    """
    由对齐行构建 源->目标 方向的图

    Args:
        line: 主对齐行;swap_direction 时为 目标-源 顺序
        reverse_line: 反方向的对齐行,与主对齐按 merge_mode 合并
    """
    if options.swap_direction:
        graph = parse_pharaoh(line, n_tgt, n_src).swapped()
    else:
        graph = parse_pharaoh(line, n_src, n_tgt)

    if reverse_line is None:
        return graph

    if options.swap_direction:
        backward = parse_pharaoh(reverse_line, n_src, n_tgt)
    else:
        backward = parse_pharaoh(reverse_line, n_tgt, n_src).swapped()
    return merge_graphs(graph, backward, options.merge_mode)


def _project_one(
    src: Sentence,
    forms: Sequence[str],
    line: str,
    reverse_line: Optional[str],
    lexicon: MorphLexicon,
    options: ProjectionOptions,
) -> ProjectionResult:
    if not forms:
        raise ProjectionError("target sentence is empty")

    graph = build_graph(line, len(src), len(forms), options, reverse_line)
    analyses = analyze_forms(lexicon, forms)
    if RootOrder(options.root_order) is RootOrder.FILTER_FIRST:
        graph = filter_by_pos(graph, src.upos_tags, [a.upos for a in analyses])

    return project_sentence(
        ProjectionInput(src=src, tgt_forms=tuple(forms), graph=graph, tgt_analyses=tuple(analyses)),
        options,
    )


def project_treebank(
    src_treebank: Treebank,
    tgt_sentences: Sequence[Sequence[str]],
    alignments: Sequence[str],
    lexicon: MorphLexicon,
    options: ProjectionOptions = ProjectionOptions(),
    reverse_alignments: Optional[Sequence[str]] = None,
) -> ProjectionOutcome:
    """
    逐句投射整个树库

    第 i 个输出句子对应第 i 个输入句子;某句失败时记录序号并继续处理其余句子。

    Args:
        src_treebank: 源语言树库
        tgt_sentences: 目标句词形列表
        alignments: 每句一行 Pharaoh 对齐
        lexicon: 目标语言形态词典
        options: 投射开关
        reverse_alignments: 反方向对齐行(可选)

    Raises:
        ProjectionError: 各输入的句子数不一致
    """
    counts = {
        "source sentences": len(src_treebank),
        "target sentences": len(tgt_sentences),
        "alignment lines": len(alignments),
    }
    if reverse_alignments is not None:
        counts["reverse alignment lines"] = len(reverse_alignments)
    if len(set(counts.values())) > 1:
        detail = ", ".join(f"{name}={count}" for name, count in counts.items())
        raise ProjectionError(f"input counts differ: {detail}")

    def work(index: int):
        ordinal = index + 1
        try:
            result = _project_one(
                src_treebank[index],
                tgt_sentences[index],
                alignments[index],
                reverse_alignments[index] if reverse_alignments is not None else None,
                lexicon,
                options,
            )
        except ProjectorError as e:
            reason = getattr(e, "reason", str(e))
            logger.warning(f"第 {ordinal} 句投射失败: {reason}")
            return ordinal, None, SentenceFailure(ordinal, reason)
        logger.debug(
            f"第 {ordinal} 句: root {result.root_case.value}"
            + (f" (tier {result.root_tier})" if result.root_tier is not None else "")
        )
        return ordinal, result, None

    indices = range(len(src_treebank))
    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            items = list(pool.map(work, indices))
    else:
        items = [work(index) for index in indices]

    outcome = ProjectionOutcome(options=options)
    for ordinal, result, failure in items:
        if failure is not None:
            outcome.failures.append(failure)
        else:
            outcome.results.append((ordinal, result))
    return outcome


__all__ = [
    'Provenance',
    'ProjectionOptions',
    'ProjectionInput',
    'ProjectionResult',
    'ProjectionOutcome',
    'SentenceReport',
    'SentenceFailure',
    'project_sentence',
    'project_treebank',
    'build_graph',
]
