"""Binary words, reversal, one-run encodings and necklace periods.

Words print with index 0 leftmost, matching the tables they are compared
against.  Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

#: Longest word accepted by the constructors.  Exhaustive work stays far below.
MAX_WORD_LENGTH = 1024

Composition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class BinaryWord:
    """A non-empty word over {0, 1}.

    Ordering is lexicographic on the bits, which for equal lengths is the
    same as comparing the printed strings.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("empty word")
        if len(bits) > MAX_WORD_LENGTH:
            raise ValueError(f"word longer than {MAX_WORD_LENGTH}")
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"non-binary letter {b!r} at index {i}")
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BinaryWord(self.bits[i])
        return self.bits[i]

    def __str__(self):
        return "".join(map(str, self.bits))

    def __repr__(self):
        return f"BinaryWord('{self}')"

    @classmethod
    def zeros(cls, n: int) -> BinaryWord:
        return cls((0,) * n)

    @classmethod
    def ones(cls, n: int) -> BinaryWord:
        return cls((1,) * n)


def parse_word(text: str) -> BinaryWord:
    if not text:
        raise ValueError("empty word")
    for i, ch in enumerate(text):
        if ch not in "01":
            raise ValueError(f"invalid character {ch!r} at index {i}")
    return BinaryWord(tuple(int(ch) for ch in text))


def as_word(w: BinaryWord | str | Sequence[int]) -> BinaryWord:
    """Coerce a string or bit sequence to a BinaryWord."""
    if isinstance(w, BinaryWord):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return BinaryWord(tuple(w))


def reverse(w: BinaryWord) -> BinaryWord:
    return BinaryWord(w.bits[::-1])


def ones_count(w: BinaryWord | Sequence[int]) -> int:
    return sum(w)


def ore_bits(bits: Sequence[int]) -> Composition:
    """One-run encoding of a raw bit sequence (the empty sequence gives (0,))."""
    parts = []
    run = 0
    for b in bits:
        if b:
            run += 1
        else:
            parts.append(run)
            run = 0
    parts.append(run)
    return tuple(parts)


def bits_from_ore(parts: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for i, a in enumerate(parts):
        if a < 0:
            raise ValueError(f"negative part {a} at index {i}")
        if i:
            out.append(0)
        out.extend([1] * a)
    return tuple(out)


def one_run_encoding(w: BinaryWord) -> Composition:
    """Lengths of the 1-runs delimited by the zeros of ``w``.

    A word with k zeros yields k+1 parts summing to its number of ones.
    """
    return ore_bits(w.bits)


def from_one_run_encoding(c: Sequence[int]) -> BinaryWord:
    if len(c) == 0:
        raise ValueError("a composition needs at least one part")
    return BinaryWord(bits_from_ore(c))


def necklace_period(w: Sequence) -> int:
    """Smallest s >= 1 with w rotated left by s equal to w.

    Works for any alphabet; the answer always divides len(w).
    """
    seq = tuple(w)
    n = len(seq)
    if n == 0:
        raise ValueError("empty sequence has no period")
    # smallest s such that seq == seq[s:] + seq[:s] is the first non-trivial
    # occurrence of seq inside seq+seq
    doubled = seq + seq
    for s in range(1, n + 1):
        if n % s == 0 and doubled[s:s + n] == seq:
            return s
    raise AssertionError("unreachable")


def necklace_min(w: Sequence) -> tuple:
    """Lexicographically least rotation of ``w``."""
    seq = tuple(w)
    return min(seq[i:] + seq[:i] for i in range(len(seq))) if seq else seq


def all_words(n: int) -> Iterable[tuple[int, ...]]:
    """Every bit tuple of length n, in lexicographic order."""
    for x in range(1 << n):
        yield tuple((x >> (n - 1 - i)) & 1 for i in range(n))
