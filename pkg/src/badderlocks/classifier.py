"""Reference message classifier: S-box expansion followed by a large CRC.

This is the correctness baseline.  It works directly on polynomials via
gf2poly and makes no attempt at throughput; the table-driven engine in
fastcrc is checked against it bit for bit.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Collection

from . import gf2poly, sbox
from .params import GeneratorEntry

__all__ = ["ClassifierDigest", "classify", "entropy_ratio"]


@dataclass(frozen=True)
class ClassifierDigest:
    """Byte-aligned classifier output together with the generator entry used."""

    data: bytes
    entry: GeneratorEntry

    def __post_init__(self):
        if len(self.data) != self.entry.aligned_bits // 8:
            raise ValueError("digest length does not match the entry's aligned size")

    def hex(self) -> str:
        return self.data.hex().upper()


def classify(m: bytes, e: GeneratorEntry) -> ClassifierDigest:
    """Classifier digest of a byte string under generator entry e.

    The expanded message is shifted left by the generator degree and reduced
    modulo the generator; the remainder is emitted big-endian, left-padded
    with zero bits up to the byte-aligned output size.  There is no final
    inversion step.
    """
    expanded = sbox.expand_message(m)
    rem = gf2poly.remainder(gf2poly.shift_left(expanded, e.degree), e.generator)
    return ClassifierDigest(rem.value.to_bytes(e.aligned_bits // 8, "big"), e)


def entropy_ratio(messages: Collection[bytes], e: GeneratorEntry) -> float:
    """Digest entropy over source entropy for a uniformly sampled message set.

    With source entropy Es = log2(|messages|) and Ed the Shannon entropy of
    the digest distribution, returns Ed / min(Es, degree).  The set must
    contain at least 2 distinct messages for the ratio to be defined.
    """
    distinct = set(messages)
    count = len(distinct)
    if count < 2:
        raise ValueError("entropy ratio needs at least 2 distinct messages")
    es = math.log2(count)
    tally = Counter(classify(m, e).data for m in distinct)
    ed = -sum((c / count) * math.log2(c / count) for c in tally.values())
    return ed / min(es, e.degree)
