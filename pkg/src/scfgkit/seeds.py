"""Deterministic seed derivation.

Independent random streams (vocabulary draws, per-trial sampling, bootstrap
resampling) are keyed off one master seed.  Substream seeds are the first 8
bytes of a BLAKE2b digest over the parts' canonical repr, giving a stated,
stable 64-bit mixing function: the same parts always yield the same seed, and
distinct cells get effectively independent streams.
"""

from __future__ import annotations

import hashlib


def derive_seed(*parts: object) -> int:
    """Mix arbitrary hashable parts (ints, strings) into a 64-bit seed."""
    payload = "\x1f".join(repr(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "big")
