"""
Exact string primitives on reads: border array, smallest period, overlap and prefix.

Sequences are plain ``str`` values, already normalised to upper case by the
read parser. All functions are pure.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from superpop.exceptions import InputError

Sequence = str


@dataclass(frozen=True)
class Alphabet:
    """A validated symbol set. ``symbols=None`` accepts any printable non-space ASCII."""
    name: str
    symbols: Optional[FrozenSet[str]] = None

    def normalize(self, raw: str) -> str:
        return raw.strip().upper()

    def first_invalid(self, seq: str) -> Optional[str]:
        """Return the first symbol outside the alphabet, or None."""
        allowed = self.symbols if self.symbols is not None else _GENERIC
        for ch in seq:
            if ch not in allowed:
                return ch
        return None


_GENERIC = frozenset(c for c in string.printable if not c.isspace())

GENERIC = Alphabet("generic")
DNA = Alphabet("dna", frozenset("ACGT"))
DNA_N = Alphabet("dna-n", frozenset("ACGTN"))
PROTEIN = Alphabet("protein", frozenset(string.ascii_uppercase))

ALPHABETS = {a.name: a for a in (GENERIC, DNA, DNA_N, PROTEIN)}


def _require(s: str, what: str = "sequence") -> None:
    if not s:
        raise InputError(f"empty {what}")


def border_array(s: Sequence) -> List[int]:
    """Entry k is the length of the longest proper border of s[:k+1]."""
    _require(s)
    border = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = border[k - 1]
        if s[i] == s[k]:
            k += 1
        border[i] = k
    return border


def smallest_period(s: Sequence) -> int:
    """Least p with s[i] == s[i+p] for all valid i."""
    return len(s) - border_array(s)[-1]


def overlap(u: Sequence, v: Sequence) -> int:
    """Length of the longest suffix of u that is also a prefix of v.

    Runs u through the KMP automaton of v; the final state is the answer.
    """
    _require(u)
    _require(v)
    border = border_array(v)
    k = 0
    for ch in u:
        if k == len(v):
            k = border[k - 1]
        while k and ch != v[k]:
            k = border[k - 1]
        if ch == v[k]:
            k += 1
    return k


def prefix_len(u: Sequence, v: Sequence) -> int:
    """|pref(u, v)| = |u| - |ov(u, v)|."""
    return len(u) - overlap(u, v)


def prefix(u: Sequence, v: Sequence) -> Sequence:
    """The part of u that does not overlap v."""
    return u[:prefix_len(u, v)]


def overlap_string(u: Sequence, v: Sequence) -> Sequence:
    k = overlap(u, v)
    return u[len(u) - k:]
