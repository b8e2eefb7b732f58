"""Rendering pseudo-words into different writing systems.

Every vocabulary word starts life as a lowercase Latin skeleton of CVC
syllables (see :mod:`scfgkit.lexicon`).  A script maps that skeleton,
character by character, into a writing system: Cyrillic substitutes letters
one for one, Hebrew keeps the consonants and drops the vowels, pointed
Hebrew turns each vowel into a pointing mark on the preceding consonant, and
the diacritic Latin variant decorates a fixed subset of letters with
combining marks.  The mapping tables live in a versioned data file
(``data/script_tables.json``) so they can be inspected or replaced wholesale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache, cached_property
from importlib import resources
from pathlib import Path

Ranges = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ScriptSpec:
    """One writing system: codepoint ranges plus a skeleton-to-script map."""

    name: str
    base_ranges: Ranges
    diacritic_ranges: Ranges
    mapping: tuple[tuple[str, str], ...]

    @cached_property
    def _map(self) -> dict[str, str]:
        return dict(self.mapping)

    def render(self, char: str) -> str:
        if char in self._map:
            return self._map[char]
        if not self.mapping:  # identity script
            return char
        raise KeyError(f"script {self.name} has no mapping for {char!r}")

    def in_ranges(self, char: str) -> bool:
        cp = ord(char)
        return any(lo <= cp <= hi for lo, hi in self.base_ranges + self.diacritic_ranges)

    def is_diacritic(self, char: str) -> bool:
        cp = ord(char)
        return any(lo <= cp <= hi for lo, hi in self.diacritic_ranges)

    def covers(self, word: str) -> bool:
        """True when every codepoint of ``word`` falls in this script's ranges
        and, for scripts that use diacritics, at least one diacritic appears."""
        if not all(self.in_ranges(ch) for ch in word):
            return False
        if self.diacritic_ranges and not any(self.is_diacritic(ch) for ch in word):
            return False
        return True


def _parse_ranges(raw: list[list[str]]) -> Ranges:
    return tuple((int(lo, 16), int(hi, 16)) for lo, hi in raw)


def load_script_tables(path: str | Path | None = None) -> dict[str, ScriptSpec]:
    """Load script specs from a table file (the packaged one by default)."""
    if path is None:
        data = resources.files("scfgkit.data").joinpath("script_tables.json").read_text("utf-8")
    else:
        data = Path(path).read_text("utf-8")
    raw = json.loads(data)
    if raw.get("version") != 1:
        raise ValueError(f"unsupported script table version: {raw.get('version')!r}")
    specs = {}
    for name, entry in raw["scripts"].items():
        specs[name] = ScriptSpec(
            name=name,
            base_ranges=_parse_ranges(entry["base_ranges"]),
            diacritic_ranges=_parse_ranges(entry["diacritic_ranges"]),
            mapping=tuple(sorted(entry["map"].items())),
        )
    return specs


@cache
def default_scripts() -> dict[str, ScriptSpec]:
    return load_script_tables()


SCRIPT_NAMES = ("Latin", "LatinDiacritics", "Cyrillic", "Hebrew", "HebrewPointed")


def get_script(script: str | ScriptSpec, tables: dict[str, ScriptSpec] | None = None) -> ScriptSpec:
    if isinstance(script, ScriptSpec):
        return script
    table = tables if tables is not None else default_scripts()
    try:
        return table[script]
    except KeyError:
        raise KeyError(f"unknown script {script!r}; known: {', '.join(sorted(table))}") from None


def transliterate(word: str, script: str | ScriptSpec, tables: dict[str, ScriptSpec] | None = None) -> str:
    """Render a Latin-skeleton word in the given script, left to right."""
    spec = get_script(script, tables)
    return "".join(spec.render(ch) for ch in word)


def script_of(word: str, tables: dict[str, ScriptSpec] | None = None) -> frozenset[str]:
    """All script names consistent with ``word``; empty for mixed-script text.

    A script is consistent when it covers every codepoint and, if it defines
    diacritics, at least one diacritic codepoint is present (so plain Latin
    text reads as Latin, not as diacritic-less LatinDiacritics).
    """
    table = tables if tables is not None else default_scripts()
    return frozenset(name for name, spec in table.items() if spec.covers(word))
