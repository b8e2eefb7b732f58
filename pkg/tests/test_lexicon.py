import re

from hypothesis import given, settings
from hypothesis import strategies as st

from scfgkit.lexicon import (
    CONSONANTS,
    SUFFIX_SHAPES,
    VOWELS,
    english_words,
    generate_suffixes,
    generate_vocab,
    is_cvc_word,
    novel_words,
)
from scfgkit.scripts import transliterate


def test_english_wordlist_loads():
    words = english_words()
    assert {"the", "box", "open"} <= words
    assert all(w == w.lower() for w in words)


def test_cvc_shape_recognizer():
    assert is_cvc_word("rofxew")
    assert is_cvc_word("vejdetwukwesfef")
    assert not is_cvc_word("rof")          # one syllable
    assert not is_cvc_word("rofxewrofxewrofxew")  # six syllables
    assert not is_cvc_word("aof")          # vowel onset
    assert not is_cvc_word("rofxe")        # open final syllable


def test_generated_words_are_cvc_and_novel():
    words = generate_vocab(200, rng_seed=0)
    assert len(set(words)) == 200
    assert all(is_cvc_word(w) for w in words)
    assert novel_words(words)


def test_generation_is_deterministic_and_seed_sensitive():
    assert generate_vocab(30, rng_seed=5) == generate_vocab(30, rng_seed=5)
    assert generate_vocab(30, rng_seed=5) != generate_vocab(30, rng_seed=6)


def test_forbidden_words_are_avoided():
    first = generate_vocab(20, rng_seed=1)
    second = generate_vocab(20, rng_seed=1, forbidden=first)
    assert not set(first) & set(second)


def test_distinct_key_controls_collisions():
    # keying on the consonant skeleton forces distinctness after a
    # vowel-dropping script has been applied
    skeleton = lambda w: "".join(c for c in w if c not in VOWELS)
    words = generate_vocab(100, rng_seed=2, distinct_key=skeleton)
    assert len({skeleton(w) for w in words}) == 100
    rendered = [transliterate(w, "Hebrew") for w in words]
    assert len(set(rendered)) == 100


def test_suffix_shapes_and_distinctness():
    shape_re = re.compile(f"[{VOWELS}]|[{VOWELS}][{CONSONANTS}]|[{CONSONANTS}][{VOWELS}]|[{CONSONANTS}][{VOWELS}][{CONSONANTS}]")
    suffixes = generate_suffixes(4, rng_seed=3)
    assert len(set(suffixes)) == 4
    for s in suffixes:
        assert shape_re.fullmatch(s), s
        assert 1 <= len(s) <= 3
    assert generate_suffixes(4, rng_seed=3) == generate_suffixes(4, rng_seed=3)


def test_suffixes_distinct_under_key():
    skeleton = lambda s: "".join(c for c in s if c not in VOWELS)
    suffixes = generate_suffixes(4, rng_seed=4, distinct_key=skeleton)
    assert len({skeleton(s) for s in suffixes}) == 4


def test_suffix_shape_inventory_is_full():
    # over many seeds all four shapes show up
    seen = set()
    for seed in range(40):
        for s in generate_suffixes(4, rng_seed=seed):
            if len(s) == 1:
                seen.add("V")
            elif len(s) == 3:
                seen.add("CVC")
            elif s[0] in VOWELS:
                seen.add("VC")
            else:
                seen.add("CV")
    assert seen == set(SUFFIX_SHAPES)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**9), count=st.integers(min_value=1, max_value=40))
def test_vocab_properties_hold_for_any_seed(seed, count):
    words = generate_vocab(count, rng_seed=seed)
    assert len(words) == count
    assert len(set(words)) == count
    assert all(is_cvc_word(w) for w in words)
    assert novel_words(words)
