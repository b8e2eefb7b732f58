"""Translation quality measures: exact match, bag of words, BLEU, chrF++.

All four score into [0, 1] and agree directionally (1 best).  The languages
here are whitespace-delimited by construction, so tokenization is plain
whitespace splitting throughout.

BLEU follows SacreBLEU's sentence-level behavior at ``tokenize='none'``:
n-gram precisions up to the effective order (the largest order with any
candidate n-grams), exponential smoothing for zero counts (each zero halves
the floor again), and the standard brevity penalty.  chrF++ averages the
per-order F(beta) of character n-grams (whitespace removed) and word n-grams
over the orders where both sides have n-grams.

For multi-reference items (a gold set with several credited variants) exact
match is membership; the graded metrics take the maximum over the gold set.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .grammar import as_words

Sentence = "str | tuple[str, ...] | list[str]"


@dataclass(frozen=True)
class BleuConfig:
    """max_order n-gram precisions, optionally weighted (uniform when None,
    renormalized over the effective order); smoothing is "exp-floor"
    (SacreBLEU's 'exp') or "none"."""

    max_order: int = 4
    weights: tuple[float, ...] | None = None
    smoothing: str = "exp-floor"

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.smoothing not in ("exp-floor", "none"):
            raise ValueError(f"unknown smoothing: {self.smoothing!r}")
        if self.weights is not None:
            if len(self.weights) != self.max_order:
                raise ValueError("need one weight per order")
            if any(w < 0 for w in self.weights):
                raise ValueError("weights must be nonnegative")
            if not math.isclose(sum(self.weights), 1.0, abs_tol=1e-9):
                raise ValueError("weights must sum to 1")


@dataclass(frozen=True)
class ChrfConfig:
    beta: float = 2.0
    char_order: int = 6
    word_order: int = 2

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError("beta must be positive")


@dataclass(frozen=True)
class ScoreRecord:
    """Per-candidate metric values, plus any error labels attached later."""

    exact: int
    bag_of_words: int
    bleu: float
    chrfpp: float
    labels: tuple[str, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "bag_of_words": self.bag_of_words,
            "bleu": self.bleu,
            "chrfpp": self.chrfpp,
            "labels": list(self.labels),
        }


def _ngram_counts(tokens, n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def exact_match(cand: Sentence, golds) -> int:
    """1 iff the candidate equals some member of the gold set."""
    words = as_words(cand)
    return int(any(words == as_words(g) for g in golds))


def bag_of_words(cand: Sentence, gold: Sentence) -> int:
    """1 iff candidate and gold agree as unordered multisets of words."""
    return int(Counter(as_words(cand)) == Counter(as_words(gold)))


def _bleu_stats(cand_words, gold_words, max_order: int):
    correct = [0] * max_order
    total = [0] * max_order
    gold_counts = [_ngram_counts(gold_words, n + 1) for n in range(max_order)]
    for n in range(max_order):
        cand_counts = _ngram_counts(cand_words, n + 1)
        total[n] = sum(cand_counts.values())
        correct[n] = sum((cand_counts & gold_counts[n]).values())
    return correct, total


def _bleu_from_stats(
    correct, total, sys_len: int, ref_len: int, cfg: BleuConfig, effective: bool
) -> float:
    precisions = [0.0] * cfg.max_order
    floor = 1.0
    effective_order = cfg.max_order
    for n in range(cfg.max_order):
        if total[n] == 0:
            break
        if effective:
            effective_order = n + 1
        if correct[n] == 0:
            if cfg.smoothing == "exp-floor":
                floor *= 2.0
                precisions[n] = 1.0 / (floor * total[n])
        else:
            precisions[n] = correct[n] / total[n]
    if sys_len == 0:
        return 0.0
    brevity = math.exp(1 - ref_len / sys_len) if sys_len < ref_len else 1.0
    weights = cfg.weights or tuple(1.0 / cfg.max_order for _ in range(cfg.max_order))
    used = weights[:effective_order]
    norm = sum(used)
    if norm == 0:
        return 0.0
    log_sum = sum(
        w / norm * (math.log(p) if p > 0 else -9999999999)
        for w, p in zip(used, precisions)
    )
    return brevity * math.exp(log_sum)


def bleu(cand: Sentence, gold: Sentence, cfg: BleuConfig | None = None) -> float:
    """Sentence-level BLEU in [0, 1] (effective-order, smoothed per cfg)."""
    cfg = cfg or BleuConfig()
    cand_words = as_words(cand)
    gold_words = as_words(gold)
    correct, total = _bleu_stats(cand_words, gold_words, cfg.max_order)
    return _clamp(
        _bleu_from_stats(
            correct, total, len(cand_words), len(gold_words), cfg, effective=True
        )
    )


def corpus_bleu(cands, golds, cfg: BleuConfig | None = None) -> float:
    """Corpus-level BLEU: statistics pooled over pairs, fixed n-gram order."""
    cfg = cfg or BleuConfig()
    correct = [0] * cfg.max_order
    total = [0] * cfg.max_order
    sys_len = ref_len = 0
    if len(cands) != len(golds):
        raise ValueError("candidate and gold streams differ in length")
    for cand, gold in zip(cands, golds):
        cand_words = as_words(cand)
        gold_words = as_words(gold)
        c, t = _bleu_stats(cand_words, gold_words, cfg.max_order)
        for n in range(cfg.max_order):
            correct[n] += c[n]
            total[n] += t[n]
        sys_len += len(cand_words)
        ref_len += len(gold_words)
    return _clamp(
        _bleu_from_stats(correct, total, sys_len, ref_len, cfg, effective=False)
    )


def _chrf_order_stats(cand: Sentence, gold: Sentence, cfg: ChrfConfig):
    """(cand count, gold count, overlap) per order: chars first, then words."""
    cand_words = as_words(cand)
    gold_words = as_words(gold)
    cand_chars = "".join(cand_words)
    gold_chars = "".join(gold_words)
    stats = []
    for n in range(1, cfg.char_order + 1):
        c = _ngram_counts(cand_chars, n)
        g = _ngram_counts(gold_chars, n)
        stats.append((sum(c.values()), sum(g.values()), sum((c & g).values())))
    for n in range(1, cfg.word_order + 1):
        c = _ngram_counts(cand_words, n)
        g = _ngram_counts(gold_words, n)
        stats.append((sum(c.values()), sum(g.values()), sum((c & g).values())))
    return stats


def _chrf_from_stats(stats, beta: float) -> float:
    total = 0.0
    effective = 0
    for n_cand, n_gold, match in stats:
        if n_cand == 0 or n_gold == 0:
            continue
        effective += 1
        prec = match / n_cand
        rec = match / n_gold
        if prec + rec > 0:
            total += (1 + beta**2) * prec * rec / (beta**2 * prec + rec)
    return total / effective if effective else 0.0


def chrfpp(cand: Sentence, gold: Sentence, cfg: ChrfConfig | None = None) -> float:
    """chrF++ in [0, 1]: mean per-order F(beta) of character and word n-grams."""
    cfg = cfg or ChrfConfig()
    return _clamp(_chrf_from_stats(_chrf_order_stats(cand, gold, cfg), cfg.beta))


def corpus_chrfpp(cands, golds, cfg: ChrfConfig | None = None) -> float:
    """Corpus-level chrF++: per-order statistics summed over pairs."""
    cfg = cfg or ChrfConfig()
    if len(cands) != len(golds):
        raise ValueError("candidate and gold streams differ in length")
    orders = cfg.char_order + cfg.word_order
    pooled = [(0, 0, 0)] * orders
    for cand, gold in zip(cands, golds):
        stats = _chrf_order_stats(cand, gold, cfg)
        pooled = [
            (a + x, b + y, c + z) for (a, b, c), (x, y, z) in zip(pooled, stats)
        ]
    return _clamp(_chrf_from_stats(pooled, cfg.beta))


def score_candidate(
    cand: Sentence,
    golds,
    bleu_cfg: BleuConfig | None = None,
    chrf_cfg: ChrfConfig | None = None,
) -> ScoreRecord:
    """Score one candidate against a nonempty gold set.

    Exact match is membership in the gold set; bag of words, BLEU and chrF++
    each take their maximum over the set (the crediting rule for grammars
    that pair one source with several target variants).
    """
    golds = [as_words(g) for g in golds]
    if not golds:
        raise ValueError("gold set is empty")
    return ScoreRecord(
        exact=exact_match(cand, golds),
        bag_of_words=max(bag_of_words(cand, g) for g in golds),
        bleu=max(bleu(cand, g, bleu_cfg) for g in golds),
        chrfpp=max(chrfpp(cand, g, chrf_cfg) for g in golds),
    )
