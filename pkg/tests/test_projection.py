"""注释投射: 根节点解析、匹配、字段转移、整库投射"""
import random
import time

import pytest

from src.core.alignment import parse_pharaoh
from src.core.config import DEFAULT_TAG_MAP, MergeMode, RootOrder, UposSource
from src.core.conllu import EMPTY, Sentence, Treebank, read_treebank, serialize_conllu, validate_tree
from src.core.errors import ProjectionError, ProjectorError
from src.core.morph import Analysis, MorphLexicon, analyze_forms, load_lexicon, load_tag_map, parse_lexicon
from src.services.projection import (
    ProjectionInput,
    ProjectionOptions,
    Provenance,
    RootCase,
    SentenceReport,
    build_graph,
    format_provenance,
    format_sentence_report,
    parse_provenance,
    parse_sentence_report,
    project_sentence,
    project_treebank,
    read_target_sentences,
    resolve_root,
)

from conftest import FIXTURES, build_sentence, random_sentence


@pytest.fixture(scope="module")
def tag_map():
    return load_tag_map(DEFAULT_TAG_MAP)


@pytest.fixture(scope="module")
def kyrgyz_lexicon(tag_map):
    return load_lexicon(FIXTURES / "kyrgyz" / "ky.lexicon.tsv", tag_map)


def unknown(forms):
    return tuple(Analysis(form, "X") for form in forms)


# ========== 根节点解析 ==========

def verb_root_sentence(root_upos="VERB", n=3, root=2):
    rows = []
    for i in range(1, n + 1):
        if i == root:
            rows.append((f"s{i}", root_upos, 0, "root"))
        else:
            rows.append((f"s{i}", "NOUN", root, "dep"))
    return build_sentence(rows)


def test_root_single_alignment():
    src = verb_root_sentence()
    graph = parse_pharaoh("0-0 1-2 0-2 2-1", 3, 3)
    resolution = resolve_root(src, graph, ["NOUN", "NOUN", "VERB"])
    assert resolution.case is RootCase.SINGLE
    assert resolution.root_pair == (1, 2)
    assert resolution.graph.sorted_edges() == [(0, 0), (2, 1)]


@pytest.mark.parametrize("root_upos, tgt_upos, position, tier", [
    ("VERB", ["NOUN", "VERB", "NOUN", "VERB", "PUNCT"], 3, 1),
    ("ADJ", ["NOUN", "VERB", "NOUN", "PUNCT"], 1, 2),
    ("ADJ", ["NOUN", "ADV", "NOUN", "PUNCT"], 2, 3),
    ("ADJ", ["ADV", "PUNCT"], 0, 4),
    ("PUNCT", ["PUNCT", "VERB"], 1, 2),
    ("X", ["X", "NOUN"], 1, 3),
    ("NOUN", ["NOUN", "X", "PUNCT"], 0, 1),
])
def test_root_unaligned_tiers(root_upos, tgt_upos, position, tier):
    src = verb_root_sentence(root_upos)
    graph = parse_pharaoh("0-0", 3, len(tgt_upos))
    resolution = resolve_root(src, graph, tgt_upos)
    assert resolution.case is RootCase.UNALIGNED
    assert resolution.target_position == position
    assert resolution.tier == tier


@pytest.mark.parametrize("line, expected", [
    ("1-0 1-2", 0),
    ("1-3 1-2", 2),
    ("1-4 1-0", 0),
])
def test_root_multiple_picks_closest(line, expected):
    src = verb_root_sentence()
    resolution = resolve_root(src, parse_pharaoh(line, 3, 5), ["NOUN"] * 5)
    assert resolution.case is RootCase.MULTIPLE
    assert resolution.target_position == expected
    assert not resolution.graph.edges


def test_root_errors():
    two_roots = build_sentence([("a", "VERB", 0, "root"), ("b", "VERB", 0, "root")])
    with pytest.raises(ProjectionError, match="multiple roots"):
        resolve_root(two_roots, parse_pharaoh("", 2, 2), ["X", "X"])
    with pytest.raises(ProjectionError, match="empty"):
        resolve_root(verb_root_sentence(), parse_pharaoh("", 3, 0), [])


# ========== 单句投射 ==========

def test_kyrgyz_identity_projection(kyrgyz_source, kyrgyz_target, kyrgyz_lexicon):
    result = project_sentence(ProjectionInput(
        src=kyrgyz_source,
        tgt_forms=tuple(kyrgyz_target),
        graph=parse_pharaoh("0-0 1-1 2-2 3-3 4-4", 5, 5),
        tgt_analyses=tuple(analyze_forms(kyrgyz_lexicon, kyrgyz_target)),
    ))
    sentence = result.sentence
    assert sentence.heads == [4, 3, 4, 0, 4]
    assert [t.deprel for t in sentence] == ["nsubj", "nmod:poss", "obl", "root", "punct"]
    assert sentence.forms == kyrgyz_target
    assert [t.lemma for t in sentence] == ["жаныбар", "эшик", "жан", "тур", "."]
    assert sentence.upos_tags == kyrgyz_source.upos_tags
    assert result.provenance == (
        Provenance.MATCHED, Provenance.MATCHED, Provenance.MATCHED, Provenance.FORCED_ROOT, Provenance.MATCHED,
    )
    assert result.root_case is RootCase.SINGLE


def test_three_to_one_alignment_fallback():
    src = build_sentence([("Okula", "NOUN", 2, "obl"), ("gitti", "VERB", 0, "root"), (".", "PUNCT", 2, "punct")])
    forms = ("мектепке", "чейин", "жөө", "барды", ".")
    result = project_sentence(ProjectionInput(
        src=src,
        tgt_forms=forms,
        graph=parse_pharaoh("0-0 0-1 0-2 1-3 2-4", 3, 5),
        tgt_analyses=unknown(forms),
    ))
    sentence = result.sentence

    flags = result.provenance[:3]
    assert flags.count(Provenance.MATCHED) == 1
    assert flags.count(Provenance.UNMATCHED) == 2
    for token, flag in zip(sentence.tokens[:3], flags):
        if flag is Provenance.MATCHED:
            assert (token.head, token.deprel) == (4, "obl")
        else:
            assert (token.head, token.deprel) == (4, EMPTY)
            assert token.upos == "X"
    assert sentence.tokens[3].head == 0
    assert (sentence.tokens[4].head, sentence.tokens[4].deprel) == (4, "punct")
    assert validate_tree(sentence) == []


def test_unmatched_head_attaches_to_root():
    # 源词 1 的 head(源词 3)在目标句中没有匹配
    src = build_sentence([("a", "NOUN", 3, "nmod"), ("b", "VERB", 0, "root"), ("c", "NOUN", 2, "obl")])
    forms = ("x", "y")
    result = project_sentence(ProjectionInput(
        src=src, tgt_forms=forms, graph=parse_pharaoh("0-0 1-1", 3, 2), tgt_analyses=unknown(forms),
    ))
    assert result.sentence.heads == [2, 0]
    assert result.sentence.tokens[0].deprel == "nmod"


def test_matched_token_fields_copied():
    src = build_sentence([("a", "NOUN", 2, "obl:cau"), ("b", "VERB", 0, "root")])
    src = Sentence(tokens=(src.tokens[0].with_fields(xpos="Noun", feats="Case=Abl", deps="2:obl", misc="Gloss=fear"), src.tokens[1]))
    forms = ("x", "y")
    result = project_sentence(ProjectionInput(
        src=src, tgt_forms=forms, graph=parse_pharaoh("0-0 1-1", 2, 2), tgt_analyses=(Analysis("lx", "ADV"), Analysis("ly", "VERB")),
    ))
    token = result.sentence.tokens[0]
    assert (token.form, token.lemma) == ("x", "lx")
    assert (token.upos, token.xpos, token.feats, token.deprel, token.misc) == ("NOUN", "Noun", "Case=Abl", "obl:cau", "Gloss=fear")
    assert token.deps == EMPTY


def test_upos_from_lexicon(kyrgyz_source, kyrgyz_target, kyrgyz_lexicon):
    result = project_sentence(
        ProjectionInput(
            src=kyrgyz_source,
            tgt_forms=tuple(kyrgyz_target),
            graph=parse_pharaoh("0-0 1-1 2-2 3-3 4-4", 5, 5),
            tgt_analyses=tuple(analyze_forms(kyrgyz_lexicon, kyrgyz_target)),
        ),
        ProjectionOptions(upos_source=UposSource.LEXICON),
    )
    assert result.sentence.upos_tags == ["NOUN", "NOUN", "NOUN", "VERB", "PUNCT"]


def test_invalid_source_tree_rejected():
    src = build_sentence([("a", "VERB", 0, "root"), ("b", "NOUN", 3, "dep"), ("c", "NOUN", 2, "dep")])
    with pytest.raises(ProjectionError, match="not a valid tree"):
        project_sentence(ProjectionInput(
            src=src, tgt_forms=("x",), graph=parse_pharaoh("", 3, 1), tgt_analyses=unknown(["x"]),
        ))


def test_input_dimensions_checked(kyrgyz_source):
    with pytest.raises(ProjectionError):
        ProjectionInput(src=kyrgyz_source, tgt_forms=("x",), graph=parse_pharaoh("", 4, 1), tgt_analyses=unknown(["x"]))


def test_projection_always_yields_valid_tree(rng):
    tags = ("NOUN", "VERB", "ADJ", "PUNCT", "X")
    for _ in range(300):
        src = random_sentence(rng, rng.randint(1, 8))
        m = rng.randint(1, 8)
        forms = tuple(f"t{j}" for j in range(m))
        edges = " ".join(
            f"{rng.randrange(len(src))}-{rng.randrange(m)}" for _ in range(rng.randint(0, 12))
        )
        result = project_sentence(ProjectionInput(
            src=src,
            tgt_forms=forms,
            graph=parse_pharaoh(edges, len(src), m),
            tgt_analyses=tuple(Analysis(f, rng.choice(tags)) for f in forms),
        ))
        assert validate_tree(result.sentence) == []
        assert len(result.sentence) == m
        assert result.provenance.count(Provenance.FORCED_ROOT) == 1
        assert len(result.matching) == result.provenance.count(Provenance.MATCHED) + 1


# ========== 对齐图构建 ==========

def test_build_graph_swap_direction():
    graph = build_graph("2-1 0-0", 2, 3, ProjectionOptions(swap_direction=True))
    assert (graph.n_src, graph.n_tgt) == (2, 3)
    assert graph.sorted_edges() == [(0, 0), (1, 2)]


@pytest.mark.parametrize("mode, expected", [
    (MergeMode.UNION, [(0, 0), (1, 1), (1, 2)]),
    (MergeMode.INTERSECTION, [(1, 1)]),
])
def test_build_graph_merges_reverse(mode, expected):
    graph = build_graph("0-0 1-1", 2, 3, ProjectionOptions(merge_mode=mode), reverse_line="1-1 2-1")
    assert graph.sorted_edges() == expected


# ========== 整库投射 ==========

def test_kyrgyz_treebank_matches_golden(kyrgyz_lexicon):
    source = read_treebank(FIXTURES / "kyrgyz" / "tr.conllu")
    targets = read_target_sentences(FIXTURES / "kyrgyz" / "ky.txt")
    outcome = project_treebank(source, targets, ["0-0 1-1 2-2 3-3 4-4"], kyrgyz_lexicon)
    assert outcome.success
    expected = (FIXTURES / "kyrgyz" / "ky.projected.conllu").read_text(encoding="utf-8")
    assert serialize_conllu(outcome.treebank) == expected


def test_partial_failure_keeps_other_sentences(tag_map):
    lexicon = load_lexicon(FIXTURES / "partial" / "ky.lexicon.tsv", tag_map)
    source = read_treebank(FIXTURES / "partial" / "tr.conllu")
    targets = read_target_sentences(FIXTURES / "partial" / "ky.txt")
    outcome = project_treebank(source, targets, ["0-0 1-1"] * 3, lexicon)

    assert not outcome.success
    assert [f.ordinal for f in outcome.failures] == [2]
    assert "multiple roots" in outcome.failures[0].message
    assert [ordinal for ordinal, _ in outcome.results] == [1, 3]
    assert len(outcome.treebank) == 2


def test_count_mismatch(kyrgyz_lexicon):
    source = read_treebank(FIXTURES / "kyrgyz" / "tr.conllu")
    with pytest.raises(ProjectionError, match="input counts differ"):
        project_treebank(source, [], ["0-0"], kyrgyz_lexicon)


def test_empty_target_sentence_fails_that_sentence(kyrgyz_lexicon):
    source = read_treebank(FIXTURES / "kyrgyz" / "tr.conllu")
    outcome = project_treebank(source, [[]], [""], kyrgyz_lexicon)
    assert outcome.failures[0].message == "target sentence is empty"


def test_root_order_changes_root_choice(tag_map):
    lexicon = parse_lexicon("x\tx\tn\ny\ty\tn\nz\tz\tv\n", tag_map)
    source = Treebank((build_sentence([("a", "NOUN", 2, "nsubj"), ("b", "VERB", 0, "root")]),))
    targets = [["x", "y", "z"]]
    alignments = ["0-0 1-1 1-2"]

    filter_first = project_treebank(source, targets, alignments, lexicon, ProjectionOptions(root_order=RootOrder.FILTER_FIRST))
    root_first = project_treebank(source, targets, alignments, lexicon, ProjectionOptions(root_order=RootOrder.ROOT_FIRST))

    (_, first), = filter_first.results
    (_, second), = root_first.results
    assert first.root_case is RootCase.SINGLE
    assert first.sentence.root_ids == [3]
    assert second.root_case is RootCase.MULTIPLE
    assert second.sentence.root_ids == [2]


def _synthetic_inputs(rng: random.Random, count: int, length: int):
    sentences, targets, alignments = [], [], []
    for _ in range(count):
        sentences.append(random_sentence(rng, length))
        targets.append([f"w{j}" for j in range(length)])
        extra = [f"{rng.randrange(length)}-{rng.randrange(length)}" for _ in range(3)]
        alignments.append(" ".join([f"{j}-{j}" for j in range(length)] + extra))
    return Treebank(tuple(sentences)), targets, alignments


def test_concatenation_commutes_with_projection(rng):
    source, targets, alignments = _synthetic_inputs(rng, 12, 6)
    lexicon = MorphLexicon()
    whole = project_treebank(source, targets, alignments, lexicon).treebank
    head = project_treebank(Treebank(source.sentences[:5]), targets[:5], alignments[:5], lexicon).treebank
    tail = project_treebank(Treebank(source.sentences[5:]), targets[5:], alignments[5:], lexicon).treebank
    assert whole == head + tail


def test_workers_do_not_change_output(rng):
    source, targets, alignments = _synthetic_inputs(rng, 40, 7)
    lexicon = MorphLexicon()
    serial = project_treebank(source, targets, alignments, lexicon, ProjectionOptions(workers=1))
    threaded = project_treebank(source, targets, alignments, lexicon, ProjectionOptions(workers=4))
    assert serialize_conllu(serial.treebank) == serialize_conllu(threaded.treebank)
    assert format_provenance(serial) == format_provenance(threaded)


def test_throughput_1000_sentences(rng):
    source, targets, alignments = _synthetic_inputs(rng, 1000, 15)
    started = time.perf_counter()
    outcome = project_treebank(source, targets, alignments, MorphLexicon())
    elapsed = time.perf_counter() - started
    assert outcome.success
    assert elapsed < 5.0


# ========== 来源标记 ==========

def test_provenance_format_and_parse(kyrgyz_lexicon):
    source = read_treebank(FIXTURES / "kyrgyz" / "tr.conllu")
    outcome = project_treebank(source, [["Жаныбарлар", "эшиктин", "жанында", "турушту", "."]], ["0-0 1-1 2-2 3-3 4-4"], kyrgyz_lexicon)
    text = format_provenance(outcome)

    assert text.splitlines()[:6] == [
        "# merge_mode=union",
        "# swap_direction=false",
        "# root_order=filter-first",
        "# upos_source=projected",
        "sentence\ttoken\tflag",
        "# sentence=1 matched=4 unmatched=0 forced=1 root_case=single root_tier=-",
    ]
    flags, metadata, reports = parse_provenance(text)
    assert metadata["root_order"] == "filter-first"
    assert flags[(1, 4)] is Provenance.FORCED_ROOT
    assert flags[(1, 1)] is Provenance.MATCHED
    assert len(flags) == 5
    assert reports == outcome.reports
    assert "sentence" not in metadata


def test_sentence_reports_keep_root_tier(kyrgyz_lexicon):
    source = read_treebank(FIXTURES / "kyrgyz" / "tr.conllu")
    # 源根 duruyordu 未对齐,按第一层(同词性 VERB)选中 турушту
    outcome = project_treebank(source, [["Жаныбарлар", "эшиктин", "жанында", "турушту", "."]], ["0-0 1-1 2-2 4-4"], kyrgyz_lexicon)

    line = format_provenance(outcome).splitlines()[5]
    assert line == "# sentence=1 matched=4 unmatched=0 forced=1 root_case=unaligned root_tier=1"

    _, _, reports = parse_provenance(format_provenance(outcome))
    assert reports == [SentenceReport(ordinal=1, matched=4, unmatched=0, forced=1, root_case=RootCase.UNALIGNED, root_tier=1)]


def test_sentence_report_line_round_trip():
    report = SentenceReport(ordinal=7, matched=2, unmatched=3, forced=1, root_case=RootCase.MULTIPLE, root_tier=None)
    line = format_sentence_report(report)
    assert parse_sentence_report(line.lstrip("#").strip()) == report


@pytest.mark.parametrize("line, message", [
    ("# sentence=1 matched=4 unmatched=0 forced=1 root_case=single", "malformed sentence report"),
    ("# sentence=1 matched=four unmatched=0 forced=1 root_case=single root_tier=-", "integers"),
    ("# sentence=1 matched=4 unmatched=0 forced=1 root_case=sideways root_tier=-", "unknown root_case"),
    ("# sentence=1 matched=4 unmatched=0 forced=1 root_case=single root_tier=²", "bad root_tier"),
])
def test_malformed_sentence_report(line, message):
    text = "sentence\ttoken\tflag\n" + line + "\n1\t1\tforced-root\n"
    with pytest.raises(ProjectorError, match=message):
        parse_provenance(text)


def test_provenance_row_rejects_non_ascii_digits():
    with pytest.raises(ProjectorError, match=r"\[line 2\] malformed provenance row"):
        parse_provenance("sentence\ttoken\tflag\n1\t²\tmatched\n")
