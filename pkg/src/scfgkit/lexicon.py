"""Pseudo-word generation.

Vocabulary words are strings of 2 to 5 CVC syllables drawn from a fixed
consonant/vowel inventory ('rofxew', 'vejdetwukwesfef').  Generation is
deterministic in the seed, avoids the embedded English wordlist, and can be
told to keep words distinct under an arbitrary key (used to rule out
collisions after rendering into scripts that drop vowels).
"""

from __future__ import annotations

import random
import re
from functools import cache
from importlib import resources
from typing import Callable, Collection, Iterable

CONSONANTS = "bcdfghjklmnpqrstvwxyz"
VOWELS = "aeiou"
MIN_SYLLABLES = 2
MAX_SYLLABLES = 5

_CVC_RE = re.compile(f"(?:[{CONSONANTS}][{VOWELS}][{CONSONANTS}])+\\Z")

# Suffix shapes for agreement morphology, mirroring natural agreement
# paradigms (-o, -ik, -mi, -sar).
SUFFIX_SHAPES = ("V", "VC", "CV", "CVC")


@cache
def english_words() -> frozenset[str]:
    """The embedded English wordlist (lowercase, one word per line)."""
    text = resources.files("scfgkit.data").joinpath("english_words.txt").read_text("utf-8")
    return frozenset(text.split())


def is_cvc_word(word: str, min_syllables: int = MIN_SYLLABLES, max_syllables: int = MAX_SYLLABLES) -> bool:
    if not _CVC_RE.match(word):
        return False
    return min_syllables <= len(word) // 3 <= max_syllables


def draw_word(rng: random.Random) -> str:
    """One raw pseudo-word (no novelty or distinctness checks)."""
    n = rng.randint(MIN_SYLLABLES, MAX_SYLLABLES)
    return "".join(
        rng.choice(CONSONANTS) + rng.choice(VOWELS) + rng.choice(CONSONANTS) for _ in range(n)
    )


def generate_vocab(
    count: int,
    rng_seed: int,
    forbidden: Collection[str] = (),
    distinct_key: Callable[[str], object] | None = None,
) -> tuple[str, ...]:
    """Draw ``count`` distinct pseudo-words, deterministically in ``rng_seed``.

    Words never collide with ``forbidden``, never appear in the English
    wordlist, and are pairwise distinct under ``distinct_key`` when given
    (identity otherwise).
    """
    rng = random.Random(rng_seed)
    english = english_words()
    forbidden = set(forbidden)
    key = distinct_key or (lambda w: w)
    seen_keys = {key(w) for w in forbidden}
    words: list[str] = []
    while len(words) < count:
        w = draw_word(rng)
        k = key(w)
        if w in english or w in forbidden or k in seen_keys:
            continue
        forbidden.add(w)
        seen_keys.add(k)
        words.append(w)
    return tuple(words)


def _draw_suffix(rng: random.Random) -> str:
    shape = rng.choice(SUFFIX_SHAPES)
    return "".join(rng.choice(VOWELS if ch == "V" else CONSONANTS) for ch in shape)


def generate_suffixes(count: int, rng_seed: int, distinct_key: Callable[[str], object] | None = None) -> tuple[str, ...]:
    """Draw ``count`` distinct agreement suffixes (shapes V, VC, CV, CVC)."""
    rng = random.Random(rng_seed)
    key = distinct_key or (lambda w: w)
    suffixes: list[str] = []
    seen: set[object] = set()
    while len(suffixes) < count:
        s = _draw_suffix(rng)
        if key(s) in seen:
            continue
        seen.add(key(s))
        suffixes.append(s)
    return tuple(suffixes)


def novel_words(words: Iterable[str]) -> bool:
    """True when no word is English (used as a sanity check on vocabularies)."""
    english = english_words()
    return not any(w in english for w in words)
