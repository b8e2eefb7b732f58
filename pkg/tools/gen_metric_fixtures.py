"""Freeze BLEU / chrF++ oracle values into tests/data/metric_fixtures.json.

Run once, offline, before implementing the package's own metric code:

    python3 tools/gen_metric_fixtures.py

BLEU values come from the vendored SacreBLEU 1.4.5 module in the examples
corpus (examples/bleu_chrf_machine_translation_metric_implementat/
r004__mjpost__sacrebleu__sacrebleu.py), called with tokenize='none',
smooth_method='exp', use_effective_order=True, and scaled to [0, 1].

chrF++ values reuse that module's character n-gram statistics (whitespace
deleted, orders 1..6) extended with whitespace-token word n-grams (orders
1..2); each order contributes an F(beta=2) score and the final value is the
mean over orders where both sides have n-grams.  This matches the standard
chrF++ definition (Popovic 2017) as implemented by modern SacreBLEU defaults.

The generated file is committed; tests treat it as ground truth.
"""

from __future__ import annotations

import importlib.util
import json
import random
import string
import sys
import types
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
REF_PATH = (
    ROOT
    / "examples"
    / "bleu_chrf_machine_translation_metric_implementat"
    / "r004__mjpost__sacrebleu__sacrebleu.py"
)
OUT_PATH = ROOT / "tests" / "data" / "metric_fixtures.json"

CHAR_ORDER = 6
WORD_ORDER = 2
BETA = 2


def load_reference():
    # The vendored module imports portalocker (dataset downloads) and builds
    # a MeCab tokenizer (Japanese) at import time; neither is used by the
    # 'none' tokenization path, so satisfy both imports with stubs.
    sys.modules.setdefault("portalocker", types.ModuleType("portalocker"))
    mecab = types.ModuleType("MeCab")

    class _Info:
        size = 392126
        next = None

    class _Tagger:
        def __init__(self, _args):
            pass

        def dictionary_info(self):
            return _Info()

    mecab.Tagger = _Tagger
    sys.modules.setdefault("MeCab", mecab)
    spec = importlib.util.spec_from_file_location("ref_sacrebleu", REF_PATH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def ref_bleu(ref, cand: str, gold: str, smooth_method: str = "exp") -> float:
    result = ref.corpus_bleu(
        cand,
        [[gold]],
        smooth_method=smooth_method,
        force=True,
        tokenize="none",
        use_effective_order=True,
    )
    return result.score / 100.0


def word_ngrams(sentence: str, n: int) -> Counter:
    tokens = sentence.split()
    return Counter(
        " ".join(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
    )


def ref_chrfpp(ref, cand: str, gold: str) -> float:
    stats = []
    cand_chars = ref.delete_whitespace(cand)
    gold_chars = ref.delete_whitespace(gold)
    for n in range(1, CHAR_ORDER + 1):
        stats.append((ref.extract_char_ngrams(cand_chars, n), ref.extract_char_ngrams(gold_chars, n)))
    for n in range(1, WORD_ORDER + 1):
        stats.append((word_ngrams(cand, n), word_ngrams(gold, n)))
    total = 0.0
    effective = 0
    for cand_counts, gold_counts in stats:
        n_cand = sum(cand_counts.values())
        n_gold = sum(gold_counts.values())
        if n_cand == 0 or n_gold == 0:
            continue
        effective += 1
        match = sum((cand_counts & gold_counts).values())
        prec = match / n_cand
        rec = match / n_gold
        if prec + rec > 0:
            total += (1 + BETA**2) * prec * rec / (BETA**2 * prec + rec)
    return total / effective if effective else 0.0


def pseudoword(rng: random.Random) -> str:
    out = []
    for _ in range(rng.randint(1, 3)):
        out.append(rng.choice("bcdfghjklmnpqrstvwxyz"))
        out.append(rng.choice("aeiou"))
        if rng.random() < 0.4:
            out.append(rng.choice("bcdfghjklmnpqrstvwxyz"))
    return "".join(out)


def misspell(word: str, rng: random.Random, edits: int = 1) -> str:
    chars = list(word)
    for _ in range(edits):
        op = rng.choice(("sub", "ins", "del")) if len(chars) > 1 else "ins"
        pos = rng.randrange(len(chars))
        if op == "sub":
            chars[pos] = rng.choice(string.ascii_lowercase)
        elif op == "ins":
            chars.insert(pos, rng.choice(string.ascii_lowercase))
        else:
            del chars[pos]
    return "".join(chars) or rng.choice(string.ascii_lowercase)


def perturb(gold_words: list[str], rng: random.Random) -> list[str]:
    words = list(gold_words)
    op = rng.choice(
        (
            "identity",
            "truncate",
            "truncate",
            "swap",
            "misspell",
            "misspell",
            "substitute",
            "duplicate",
            "shuffle",
            "drop",
            "prepend",
        )
    )
    if op == "truncate" and len(words) > 1:
        words = words[: rng.randrange(1, len(words))]
    elif op == "swap" and len(words) > 1:
        i, j = rng.sample(range(len(words)), 2)
        words[i], words[j] = words[j], words[i]
    elif op == "misspell":
        pos = rng.randrange(len(words))
        words[pos] = misspell(words[pos], rng, edits=rng.randint(1, 2))
    elif op == "substitute":
        words[rng.randrange(len(words))] = pseudoword(rng)
    elif op == "duplicate":
        pos = rng.randrange(len(words))
        words.insert(pos, words[pos])
    elif op == "shuffle":
        rng.shuffle(words)
    elif op == "drop" and len(words) > 1:
        del words[rng.randrange(len(words))]
    elif op == "prepend":
        words.insert(0, pseudoword(rng))
    return words


HANDCRAFTED = [
    ("a b c d", "a b c e"),
    ("wugnat", "wugnap"),
    ("identical words here", "identical words here"),
    ("xyz qrs", "aei oua"),
    ("", "some gold sentence"),
    ("one", "one"),
    ("one", "two"),
    ("a b c d e f g", "a b c d e f g h i j"),
    ("watashi wa hako wo akemasu", "watashi wa hako wo akemasu"),
    ("hako wo watashi wa akemasu", "watashi wa hako wo akemasu"),
]


def main() -> None:
    ref = load_reference()
    rng = random.Random(20260814)
    cases = []
    for cand, gold in HANDCRAFTED:
        cases.append((cand, gold))
    while len(cases) < 220:
        gold_words = [pseudoword(rng) for _ in range(rng.randint(1, 12))]
        cand_words = perturb(gold_words, rng)
        cases.append((" ".join(cand_words), " ".join(gold_words)))
    records = [
        {
            "cand": cand,
            "gold": gold,
            "bleu": ref_bleu(ref, cand, gold),
            "bleu_none": ref_bleu(ref, cand, gold, smooth_method="none"),
            "chrfpp": ref_chrfpp(ref, cand, gold),
        }
        for cand, gold in cases
    ]
    payload = {
        "provenance": {
            "bleu": (
                "vendored SacreBLEU 1.4.5 corpus_bleu(tokenize='none', "
                "smooth_method='exp', force=True, use_effective_order=True), "
                "score / 100; bleu_none is the same call with "
                "smooth_method='none'"
            ),
            "chrfpp": (
                "SacreBLEU 1.4.5 char n-gram statistics (whitespace deleted, "
                "orders 1..6) + whitespace-token word n-grams (orders 1..2); "
                "per-order F(beta=2) averaged over orders with n-grams on "
                "both sides"
            ),
            "generator": "tools/gen_metric_fixtures.py",
            "seed": 20260814,
        },
        "bleu_config": {"max_order": 4, "smoothing": "exp-floor"},
        "chrf_config": {"beta": 2, "char_order": 6, "word_order": 2},
        "cases": records,
    }
    OUT_PATH.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(records)} cases to {OUT_PATH}")


if __name__ == "__main__":
    main()
