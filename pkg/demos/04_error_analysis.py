"""Label what went wrong in imperfect translations, then aggregate rates.

Every candidate that is not exactly a gold translation gets a set of error
labels describing how it differs from the nearest gold: wrong word order,
missing or invented words, misspellings, source-language or English
leakage, and wrong script or missing diacritics.  Run:

    python demos/04_error_analysis.py
"""

from scfgkit import (
    GrammarSpec,
    aggregate,
    classify,
    generate,
    sample_pair,
    sorted_labels,
    translate,
    word_vocab,
)
from scfgkit.lexicon import english_words

grammar = generate(GrammarSpec(size=57, word_order_tgt="SOV", seed=3))
src_vocab = word_vocab(grammar, "src")
tgt_vocab = word_vocab(grammar, "tgt")

pair = sample_pair(grammar, 5, rng_seed=41)
source = " ".join(pair.source)
gold = " ".join(pair.target)
golds = translate(grammar, source)
print(f"source: {source}")
print(f"gold:   {gold}\n")

english = english_words()

def show(description: str, candidate: str) -> None:
    labels = classify(candidate, golds, src_vocab, tgt_vocab, english=english)
    print(f"{description:<22} {candidate}")
    print(f"{'':<22} -> {sorted_labels(labels) or '(no errors)'}\n")

# Hand-made failure modes, each triggering a characteristic label set.
words = gold.split()

show("perfect", gold)
show("swapped two words", " ".join([words[1], words[0]] + words[2:]))
show("dropped a word", " ".join(words[:-1]))
show("invented a word", gold + " blorptastic")
show("typo in one word", " ".join(words[:-1] + [words[-1][:-1] + "q"]))
show("copied the source", source)
show("answered in English", "the cat opened the box")

# --- aggregation -------------------------------------------------------------
# aggregate() turns per-sentence label sets into per-group counts and rates:
# the fraction of sentences in the group showing each error at least once.
label_sets = [
    classify(cand, golds, src_vocab, tgt_vocab)
    for cand in (
        gold,
        " ".join(reversed(words)),
        " ".join(words[:-1]),
        source,
    )
]
table = aggregate(label_sets, ["len5", "len5", "len5", "len5"])
print("aggregate over four candidates at length 5:")
for key, row in table.items():
    print(f"  group {key}: n={row['n']}, rates=" +
          ", ".join(f"{k}={v:.2f}" for k, v in sorted(row["rates"].items()) if v))
