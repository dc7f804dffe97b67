"""按依存关系的错误分析"""
import pytest

from src.core.conllu import Treebank
from src.core.errors import AnalysisError
from src.services.analysis import (
    RelationErrorTable,
    RelationRow,
    parse_table_tsv,
    relation_table,
    render_table,
    universal_label,
)
from src.services.projection import Provenance

from conftest import build_sentence, random_sentence


def collapse(line: str) -> str:
    return " ".join(line.split())


# ========== relation_table ==========

def test_identity_gives_full_marks(random_treebank, rng):
    treebank = random_treebank(rng, 10)
    table = relation_table(treebank, treebank)
    assert all(row.deprel_share == 100.0 and row.head_share == 100.0 for row in table.rows)
    assert table.token_count == treebank.token_count
    assert table.deprel_errors == table.head_errors == 0


def test_half_of_nsubj_correct():
    gold = Treebank((
        build_sentence([("a", "NOUN", 2, "nsubj"), ("b", "VERB", 0, "root")]),
        build_sentence([("c", "NOUN", 2, "nsubj"), ("d", "VERB", 0, "root")]),
    ))
    system = Treebank((
        build_sentence([("a", "NOUN", 2, "nsubj"), ("b", "VERB", 0, "root")]),
        build_sentence([("c", "NOUN", 2, "obj"), ("d", "VERB", 0, "root")]),
    ))
    row = relation_table(gold, system).row("nsubj")
    assert (row.total, row.deprel_correct, row.head_correct) == (2, 1, 2)
    assert row.deprel_share == 50.0


def test_subtype_strict_and_relaxed():
    gold = Treebank((build_sentence([("a", "NOUN", 2, "obl:cau"), ("b", "VERB", 0, "root")]),))
    system = Treebank((build_sentence([("a", "NOUN", 2, "obl"), ("b", "VERB", 0, "root")]),))
    assert relation_table(gold, system).row("obl:cau").deprel_correct == 0
    assert relation_table(gold, system, strict=False).row("obl:cau").deprel_correct == 1


def test_relaxed_never_lowers_counts(random_treebank, rng):
    for _ in range(30):
        gold = random_treebank(rng, 4)
        system = Treebank(tuple(random_sentence(rng, len(s), forms=s.forms) for s in gold))
        strict = relation_table(gold, system)
        relaxed = relation_table(gold, system, strict=False)
        for row in strict.rows:
            assert relaxed.row(row.deprel).deprel_correct >= row.deprel_correct


def test_universal_label():
    assert universal_label("obl:cau") == "obl"
    assert universal_label("nsubj") == "nsubj"


def test_excluded_sentences_and_conservation(random_treebank, rng):
    gold = random_treebank(rng, 5)
    changed = gold.sentences[2]
    retokenized = build_sentence([(changed.forms[0] + "x", "X", 0, "root")])
    system = Treebank(gold.sentences[:2] + (retokenized,) + gold.sentences[3:])

    table = relation_table(gold, system)

    assert table.excluded_sentences == 1
    assert table.excluded_share == 20.0
    kept = [s for i, s in enumerate(gold) if i != 2]
    assert table.token_count == sum(len(s) for s in kept)


def test_sentence_count_mismatch():
    with pytest.raises(AnalysisError):
        relation_table(Treebank((build_sentence([("a", "X", 0, "root")]),)), Treebank())


def test_rows_sorted_by_total_then_label():
    gold = Treebank((build_sentence([
        ("a", "NOUN", 3, "obj"), ("b", "NOUN", 3, "nsubj"), ("c", "VERB", 0, "root"),
        ("d", "NOUN", 3, "obj"), ("e", "ADV", 3, "advmod"),
    ]),))
    table = relation_table(gold, gold)
    assert [row.deprel for row in table.rows] == ["obj", "advmod", "nsubj", "root"]


def test_unset_gold_head_counts_as_head_error():
    gold = Treebank((build_sentence([("a", "NOUN", None, "_"), ("b", "VERB", 0, "root")]),))
    table = relation_table(gold, gold)
    assert table.row("_").head_correct == 0
    assert table.head_errors == 1


def test_unmatched_error_shares():
    gold = Treebank((build_sentence([
        ("a", "NOUN", 3, "nsubj"), ("b", "NOUN", 3, "obj"), ("c", "VERB", 0, "root"), ("d", "ADV", 3, "advmod"),
    ]),))
    system = Treebank((build_sentence([
        ("a", "NOUN", 3, "_"), ("b", "NOUN", 3, "obl"), ("c", "VERB", 0, "root"), ("d", "ADV", 2, "advmod"),
    ]),))
    provenance = {
        (1, 1): Provenance.UNMATCHED,
        (1, 2): Provenance.MATCHED,
        (1, 3): Provenance.FORCED_ROOT,
        (1, 4): Provenance.UNMATCHED,
    }

    table = relation_table(gold, system, provenance)

    assert (table.deprel_errors, table.unmatched_deprel_errors) == (2, 1)
    assert table.unmatched_deprel_error_share == 50.0
    assert (table.head_errors, table.unmatched_head_errors) == (1, 1)
    assert table.unmatched_head_error_share == 100.0


def test_no_provenance_leaves_head_share_unknown():
    gold = Treebank((build_sentence([("a", "NOUN", 2, "nsubj"), ("b", "VERB", 0, "root")]),))
    table = relation_table(gold, gold)
    assert table.unmatched_head_errors is None
    assert table.unmatched_head_error_share is None


# ========== 输出 ==========

def test_row_rendering():
    table = RelationErrorTable(rows=(RelationRow("nummod", 7, 7, 7),))
    assert collapse(render_table(table).splitlines()[1]) == "nummod 7 100% 100%"


def test_whole_percent_rounds_half_up():
    table = RelationErrorTable(rows=(RelationRow("amod", 8, 1, 7),))
    # 12.5% -> 13%, 87.5% -> 88%
    assert collapse(render_table(table).splitlines()[1]) == "amod 8 13% 88%"


def test_empty_table_renders_header_only():
    assert collapse(render_table(RelationErrorTable())) == "deprel total deprel head"
    lines = render_table(RelationErrorTable(), "tsv").splitlines()
    assert lines == ["deprel\ttotal\tdeprel_correct\thead_correct\tdeprel_share\thead_share"]


def test_text_summary_lines():
    table = RelationErrorTable(
        rows=(RelationRow("obj", 4, 2, 3),),
        excluded_sentences=1,
        total_sentences=5,
        deprel_errors=2,
        unmatched_deprel_errors=1,
        head_errors=1,
    )
    text = render_table(table)
    assert "excluded sentences: 1/5 (20.00%)" in text
    assert "deprel errors on unmatched tokens: 1/2 (50.00%)" in text
    assert "head errors on unmatched tokens" not in text


def test_tsv_round_trip(random_treebank, rng):
    gold = random_treebank(rng, 6)
    system = Treebank(tuple(random_sentence(rng, len(s), forms=s.forms) for s in gold))
    provenance = {
        (ordinal, token.id): rng.choice(list(Provenance))
        for ordinal, sentence in enumerate(system, start=1)
        for token in sentence.tokens
    }
    for table in (relation_table(gold, system), relation_table(gold, system, provenance)):
        assert parse_table_tsv(render_table(table, "tsv")) == table


def test_unknown_format():
    with pytest.raises(AnalysisError, match="unknown table format"):
        render_table(RelationErrorTable(), "html")


def test_row_invariants():
    with pytest.raises(AnalysisError):
        RelationRow("obj", 0, 0, 0)
    with pytest.raises(AnalysisError):
        RelationRow("obj", 2, 3, 0)
