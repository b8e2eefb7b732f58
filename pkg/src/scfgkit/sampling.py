"""Uniform sampling of gold sentence pairs at an exact source length.

For a grammar and a requested source length, the sampler counts the
derivations of every (nonterminal, length) cell with exact big-integer
arithmetic, then draws a derivation uniformly by walking the counts top
down.  No rejection is involved, so hitting a rare length costs the same as
hitting a common one, and equal seeds always reproduce the same pair.

Lengths are counted in surface words of the source side: a multi-word
terminal contributes each of its words, a phonetically null terminal
contributes nothing.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from functools import lru_cache

from .grammar import GrammarError, Side, SyncGrammar, SyncRule


class LengthError(ValueError):
    """No derivation exists at the requested source length."""


@dataclass(frozen=True)
class DerivationTree:
    """A derivation: a rule index plus subtrees for each source-side
    nonterminal, in source order."""

    rule_index: int
    children: tuple["DerivationTree", ...] = ()

    def preorder(self) -> list[int]:
        out: list[int] = []
        stack = [self]
        while stack:
            node = stack.pop()
            out.append(node.rule_index)
            stack.extend(reversed(node.children))
        return out


@dataclass(frozen=True)
class SentencePair:
    """A gold pair: the two surface yields of one derivation."""

    source: tuple[str, ...]
    target: tuple[str, ...]
    tree: DerivationTree

    @property
    def len_src(self) -> int:
        return len(self.source)

    @property
    def len_tgt(self) -> int:
        return len(self.target)


def _rule_shape(rule: SyncRule) -> tuple[tuple[str, ...], int]:
    """Source-side nonterminal names plus the fixed word count of terminals."""
    names = tuple(sym.text for sym in rule.src if not sym.terminal)
    words = sum(len(sym.words()) for sym in rule.src if sym.terminal)
    return names, words


def tree_rules(tree: DerivationTree):
    """Iterate rule indices of a derivation, preorder."""
    stack = [tree]
    while stack:
        node = stack.pop()
        yield node.rule_index
        stack.extend(reversed(node.children))


def tree_from_preorder(grammar: SyncGrammar, indices: list[int]) -> DerivationTree:
    """Rebuild a tree from its preorder rule indices (arity comes from the rules)."""
    pos = 0

    def build() -> DerivationTree:
        nonlocal pos
        if pos >= len(indices):
            raise ValueError("preorder ended early")
        idx = indices[pos]
        pos += 1
        names, _ = _rule_shape(grammar.rules[idx])
        return DerivationTree(idx, tuple(build() for _ in names))

    tree = build()
    if pos != len(indices):
        raise ValueError("trailing rule indices after tree was complete")
    return tree


def src_yield(grammar: SyncGrammar, tree: DerivationTree) -> tuple[str, ...]:
    return _walk_yield(grammar, tree, "src")


def tgt_yield(grammar: SyncGrammar, tree: DerivationTree) -> tuple[str, ...]:
    return _walk_yield(grammar, tree, "tgt")


def _walk_yield(grammar: SyncGrammar, tree: DerivationTree, side: Side) -> tuple[str, ...]:
    rule = grammar.rules[tree.rule_index]
    names, _ = _rule_shape(rule)
    out: list[str] = []
    for sym in rule.side(side):
        if sym.terminal:
            out.extend(sym.words())
        else:
            out.extend(_walk_yield(grammar, tree.children[names.index(sym.text)], side))
    return tuple(out)


class Sampler:
    """Count tables and uniform draws for one grammar.

    Counting is memoized per (nonterminal, length).  A derivation that could
    loop without consuming source words (a unary or null-only cycle) would
    make counts infinite; such grammars are rejected when detected.
    """

    def __init__(self, grammar: SyncGrammar):
        self.grammar = grammar
        self._shapes = [_rule_shape(r) for r in grammar.rules]
        self._by_lhs: dict[str, list[int]] = {}
        for i, r in enumerate(grammar.rules):
            self._by_lhs.setdefault(r.lhs, []).append(i)
        self._counts: dict[tuple[str, int], int] = {}
        self._seq_counts: dict[tuple[tuple[str, ...], int], int] = {}
        self._in_progress: set[tuple[str, int]] = set()
        # samplers are shared across threads (sampler_for is cached); the
        # cycle-detection set must only ever see one recursion at a time
        self._lock = threading.RLock()

    # --- counting ---------------------------------------------------------

    def count(self, length: int) -> int:
        """Number of derivations whose source yield has exactly ``length`` words."""
        with self._lock:
            return self._count(self.grammar.start, length)

    def _count(self, name: str, length: int) -> int:
        if length < 0:
            return 0
        key = (name, length)
        if key in self._counts:
            return self._counts[key]
        if key in self._in_progress:
            raise GrammarError(
                f"unbounded derivation count: {name} can derive itself without "
                f"consuming source words"
            )
        self._in_progress.add(key)
        try:
            total = 0
            for idx in self._by_lhs.get(name, ()):
                names, words = self._shapes[idx]
                total += self._count_seq(names, length - words)
            self._counts[key] = total
            return total
        finally:
            self._in_progress.discard(key)

    def _count_seq(self, names: tuple[str, ...], length: int) -> int:
        if length < 0:
            return 0
        if not names:
            return 1 if length == 0 else 0
        if len(names) == 1:
            return self._count(names[0], length)
        key = (names, length)
        if key in self._seq_counts:
            return self._seq_counts[key]
        head, rest = names[0], names[1:]
        total = sum(
            self._count(head, l) * self._count_seq(rest, length - l)
            for l in range(length + 1)
            if self._count(head, l)
        )
        self._seq_counts[key] = total
        return total

    def achievable_lengths(self, lo: int = 1, hi: int = 60) -> list[int]:
        return [l for l in range(lo, hi + 1) if self.count(l) > 0]

    # --- drawing ----------------------------------------------------------

    def sample_tree(self, length: int, rng: random.Random) -> DerivationTree:
        with self._lock:
            total = self.count(length)
            if total == 0:
                near = self.achievable_lengths(1, length + 10)
                closest = sorted(near, key=lambda l: abs(l - length))[:6]
                raise LengthError(
                    f"no derivation with source length {length}; "
                    f"nearest achievable lengths: {sorted(closest) or 'none'}"
                )
            return self._draw(self.grammar.start, length, rng)

    def _draw(self, name: str, length: int, rng: random.Random) -> DerivationTree:
        """Choosing each step proportionally to the derivation counts below it
        makes the whole draw exactly uniform: the step probabilities telescope
        to 1/count(name, length)."""
        pick = rng.randrange(self._count(name, length))
        for idx in self._by_lhs.get(name, ()):
            names, words = self._shapes[idx]
            weight = self._count_seq(names, length - words)
            if pick < weight:
                lengths = self._draw_split(names, length - words, rng)
                children = tuple(
                    self._draw(child, l, rng) for child, l in zip(names, lengths)
                )
                return DerivationTree(idx, children)
            pick -= weight
        raise AssertionError("counts out of sync with rules")

    def _draw_split(self, names: tuple[str, ...], length: int, rng: random.Random) -> list[int]:
        """Split ``length`` over ``names`` with probability proportional to the
        number of derivations under each split."""
        lengths: list[int] = []
        remaining = length
        for i, name in enumerate(names):
            rest = names[i + 1 :]
            if not rest:
                lengths.append(remaining)
                break
            pick = rng.randrange(self._count_seq(names[i:], remaining))
            for l in range(remaining + 1):
                weight = self._count(name, l) * self._count_seq(rest, remaining - l)
                if pick < weight:
                    lengths.append(l)
                    remaining -= l
                    break
                pick -= weight
            else:
                raise AssertionError("split weights out of sync")
        return lengths


@lru_cache(maxsize=64)
def _sampler(grammar: SyncGrammar) -> Sampler:
    return Sampler(grammar)


def sampler_for(grammar: SyncGrammar) -> Sampler:
    """A cached :class:`Sampler` for the grammar (count tables are reused)."""
    return _sampler(grammar)


def sample_pair(grammar: SyncGrammar, target_len_src: int, rng_seed: int) -> SentencePair:
    """Draw one gold pair whose source has exactly ``target_len_src`` words.

    Uniform over derivations of that source length; deterministic in the
    seed.  Raises :class:`LengthError` when the length is unreachable.
    """
    if target_len_src < 1:
        raise ValueError("target_len_src must be at least 1")
    s = sampler_for(grammar)
    tree = s.sample_tree(target_len_src, random.Random(rng_seed))
    return SentencePair(src_yield(grammar, tree), tgt_yield(grammar, tree), tree)
