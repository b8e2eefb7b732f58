"""Error taxonomy for failed translations.

Eight non-exclusive labels describe how a wrong candidate went wrong:

- ``word_order``: right words (as a set), wrong order.
- ``recall``: used a real target-language word that the gold sentence
  does not contain.
- ``hallucination``: used a word from neither language's vocabulary.
- ``misspelling``: a hallucinated word within edit distance 2 of a real
  target word (the near-miss subtype, so misspelling implies hallucination).
- ``source_vocab``: copied a source-language word into the translation.
- ``orthography``: a codepoint outside the target script's ranges, or a
  diacritic-bearing script rendered with no diacritics at all.
- ``english_vocab``: used an English word.
- ``omission``: failed to include every needed gold word (multiset-wise).

Labels that compare against "the" gold sentence anchor to the gold-set
member with minimum word-level edit distance to the candidate.  Callers
classify only failures; a candidate equal to some gold member gets the
empty set.
"""

from __future__ import annotations

from collections import Counter

from .grammar import as_words
from .scripts import ScriptSpec

LABELS = (
    "word_order",
    "recall",
    "hallucination",
    "misspelling",
    "source_vocab",
    "orthography",
    "english_vocab",
    "omission",
)

UNPARSEABLE = "unparseable"

# Trimmed from word edges before any comparison; models often wrap answers
# in backticks or end them with a period.
_PUNCT = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~‘’“”…"


def normalize_words(sentence) -> tuple[str, ...]:
    words = (w.strip(_PUNCT) for w in as_words(sentence))
    return tuple(w for w in words if w)


def edit_distance(a, b, limit: int | None = None) -> int:
    """Levenshtein distance over any sequences; stops early past ``limit``."""
    if len(a) < len(b):
        a, b = b, a
    if limit is not None and len(a) - len(b) > limit:
        return limit + 1
    previous = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        current = [i]
        for j, y in enumerate(b, start=1):
            current.append(
                min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + (x != y))
            )
        if limit is not None and min(current) > limit:
            return limit + 1
        previous = current
    return previous[-1]


MISSPELLING_DISTANCE = 2


def nearest_gold(cand_words: tuple[str, ...], golds) -> tuple[str, ...]:
    """The gold member at minimum word-level edit distance (ties: first)."""
    members = [as_words(g) for g in golds]
    if not members:
        raise ValueError("gold set is empty")
    return min(members, key=lambda g: edit_distance(cand_words, g))


def classify(
    cand,
    golds,
    src_vocab: frozenset[str] | set[str],
    tgt_vocab: frozenset[str] | set[str],
    script: ScriptSpec | None = None,
    english: frozenset[str] | set[str] = frozenset(),
) -> frozenset[str]:
    """Label one failed candidate against the gold set.

    ``src_vocab`` / ``tgt_vocab`` are surface word vocabularies of the two
    languages; ``script`` is the target script (None skips orthography);
    ``english`` is a lowercase English wordlist.
    """
    cand_words = normalize_words(cand)
    gold = nearest_gold(cand_words, golds)
    if cand_words == gold:
        return frozenset()
    labels = set()
    if set(cand_words) == set(gold):
        labels.add("word_order")
    gold_set = set(gold)
    for word in cand_words:
        if word in tgt_vocab and word not in gold_set:
            labels.add("recall")
        if word not in src_vocab and word not in tgt_vocab:
            labels.add("hallucination")
            if any(
                edit_distance(word, real, limit=MISSPELLING_DISTANCE)
                <= MISSPELLING_DISTANCE
                for real in tgt_vocab
            ):
                labels.add("misspelling")
        if word in src_vocab and word not in tgt_vocab:
            labels.add("source_vocab")
        if word.lower() in english:
            labels.add("english_vocab")
    if script is not None and cand_words:
        text = " ".join(cand_words)
        if any(not script.in_ranges(ch) for ch in text if ch != " "):
            labels.add("orthography")
        if script.diacritic_ranges and not any(script.is_diacritic(ch) for ch in text):
            labels.add("orthography")
    if Counter(gold) - Counter(cand_words):
        labels.add("omission")
    return frozenset(labels)


def sorted_labels(labels) -> list[str]:
    """Stable serialization order: taxonomy labels first, extras appended."""
    known = [label for label in LABELS if label in labels]
    return known + sorted(set(labels) - set(LABELS))


def aggregate(label_sets, group_keys=None) -> dict:
    """Fold label sets into per-group counts and rates.

    ``group_keys`` pairs each item with a grouping value (None puts all
    items in one group named "all").  Rates may sum past 1 since labels are
    non-exclusive; items with no label at all are tallied as "unlabeled".
    """
    label_sets = list(label_sets)
    keys = list(group_keys) if group_keys is not None else ["all"] * len(label_sets)
    if len(keys) != len(label_sets):
        raise ValueError("one group key per label set required")
    table: dict = {}
    for key, labels in zip(keys, label_sets):
        row = table.setdefault(
            key, {"n": 0, "counts": dict.fromkeys(LABELS, 0), "unlabeled": 0}
        )
        row["n"] += 1
        hit = False
        for label in labels:
            if label in row["counts"]:
                row["counts"][label] += 1
                hit = True
        if not hit:
            row["unlabeled"] += 1
    for row in table.values():
        n = row["n"]
        row["rates"] = {
            label: (count / n if n else 0.0) for label, count in row["counts"].items()
        }
    return table
