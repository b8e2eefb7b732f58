import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scfgkit.errors import (
    LABELS,
    MISSPELLING_DISTANCE,
    UNPARSEABLE,
    aggregate,
    classify,
    edit_distance,
    nearest_gold,
    normalize_words,
    sorted_labels,
)
from scfgkit.lexicon import english_words
from scfgkit.scripts import get_script, transliterate

SRC = frozenset({"wug", "nat", "ido"})
TGT = frozenset({"lomu", "bako", "zatpuj", "kem"})
GOLDS = {"lomu bako zatpuj"}


def labels_for(cand, golds=GOLDS, **kw):
    kw.setdefault("src_vocab", SRC)
    kw.setdefault("tgt_vocab", TGT)
    return classify(cand, golds, **kw)


def test_taxonomy_is_fixed():
    assert LABELS == (
        "word_order",
        "recall",
        "hallucination",
        "misspelling",
        "source_vocab",
        "orthography",
        "english_vocab",
        "omission",
    )
    assert UNPARSEABLE == "unparseable"


def test_matching_candidate_gets_no_labels():
    assert labels_for("lomu bako zatpuj") == frozenset()
    # edge punctuation is forgiven before comparison
    assert labels_for("lomu bako zatpuj.") == frozenset()
    assert labels_for("`lomu bako zatpuj`") == frozenset()


def test_word_order():
    assert labels_for("bako lomu zatpuj") == {"word_order"}
    assert labels_for("zatpuj bako lomu") == {"word_order"}


def test_recall_word_from_target_language():
    assert labels_for("lomu kem zatpuj") == {"recall", "omission"}


def test_hallucination_and_misspelling():
    # not a word of either language, far from every target word
    assert labels_for("lomu bako zzq") == {"hallucination", "omission"}
    # one letter off a real target word counts as a misspelling as well
    assert labels_for("lomu bako zatpul") == {
        "hallucination",
        "misspelling",
        "omission",
    }
    assert edit_distance("zatpul", "zatpuj") <= MISSPELLING_DISTANCE


def test_source_vocab_leak():
    assert labels_for("lomu bako wug") == {"source_vocab", "omission"}


def test_english_vocab():
    got = labels_for("lomu bako the", english=english_words())
    assert "english_vocab" in got
    assert "omission" in got
    # without a wordlist the word is just a hallucination
    assert "english_vocab" not in labels_for("lomu bako the")


def test_omission_alone():
    assert labels_for("lomu bako") == {"omission"}
    assert labels_for("") == {"omission"}


def test_extra_gold_word_is_not_omission():
    golds = {"lomu bako"}
    assert classify("lomu bako zatpuj", golds, SRC, TGT) == {"recall"}


def test_orthography_wrong_script():
    cyr = get_script("Cyrillic")
    gold = transliterate("lomu", cyr) + " " + transliterate("bako", cyr)
    golds = {gold}
    tgt = frozenset(gold.split())
    # candidate written in Latin letters violates the script ranges
    got = classify("lomu bako", golds, SRC, tgt, script=cyr)
    assert "orthography" in got
    assert classify(gold, golds, SRC, tgt, script=cyr) == frozenset()


def test_orthography_missing_diacritics():
    pointed = get_script("HebrewPointed")
    bare = get_script("Hebrew")
    gold = transliterate("lomu", pointed)
    stripped = transliterate("lomu", bare)
    got = classify(stripped, {gold}, SRC, frozenset({gold}), script=pointed)
    assert "orthography" in got


def test_nearest_gold_picks_minimum_edit_distance():
    golds = ["lomu bako zatpuj", "kem zatpuj"]
    assert nearest_gold(("kem", "zatpuj"), golds) == ("kem", "zatpuj")
    assert nearest_gold(("lomu", "bako"), golds) == ("lomu", "bako", "zatpuj")
    with pytest.raises(ValueError):
        nearest_gold(("a",), [])
    # classification is against the nearest member
    got = classify("kem zatpul", golds, SRC, TGT)
    assert got == {"hallucination", "misspelling", "omission"}


def test_normalize_words():
    assert normalize_words("a, b. `c`!") == ("a", "b", "c")
    assert normalize_words("  ") == ()
    assert normalize_words(["a.", "..", "b"]) == ("a", "b")


def test_sorted_labels_order():
    got = sorted_labels({"omission", "word_order", UNPARSEABLE, "recall"})
    assert got == ["word_order", "recall", "omission", UNPARSEABLE]


def test_aggregate_counts_and_rates():
    table = aggregate([{"recall"}, {"recall", "omission"}])
    row = table["all"]
    assert row["n"] == 2
    assert row["counts"]["recall"] == 2
    assert row["counts"]["omission"] == 1
    assert row["rates"]["recall"] == 1.0
    assert row["rates"]["omission"] == 0.5
    assert row["unlabeled"] == 0


def test_aggregate_unlabeled_and_groups():
    table = aggregate(
        [set(), {"recall"}, {UNPARSEABLE}, {"omission"}],
        group_keys=["a", "a", "b", "b"],
    )
    assert table["a"]["n"] == 2
    assert table["a"]["unlabeled"] == 1
    # a label outside the taxonomy does not count as labeled
    assert table["b"]["unlabeled"] == 1
    assert table["b"]["counts"]["omission"] == 1
    with pytest.raises(ValueError):
        aggregate([set()], group_keys=[])


def test_edit_distance_examples():
    assert edit_distance("kitten", "sitting") == 3
    assert edit_distance("", "abc") == 3
    assert edit_distance(("a", "b"), ("b", "a")) == 2
    assert edit_distance("same", "same") == 0


short = st.text(alphabet="abcde", max_size=8)


@settings(max_examples=200, deadline=None)
@given(a=short, b=short)
def test_edit_distance_properties(a, b):
    d = edit_distance(a, b)
    assert d == edit_distance(b, a)
    assert d <= max(len(a), len(b))
    assert (d == 0) == (a == b)
    assert d >= abs(len(a) - len(b))
    limited = edit_distance(a, b, limit=2)
    if d <= 2:
        assert limited == d
    else:
        assert limited > 2


@settings(max_examples=100, deadline=None)
@given(
    cand=st.lists(st.sampled_from(sorted(SRC | TGT) + ["zzq", "the"]), max_size=6),
)
def test_classify_returns_known_labels(cand):
    got = labels_for(" ".join(cand), english=english_words())
    assert got <= set(LABELS)
