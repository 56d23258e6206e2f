"""Quotient/remainder encoding of binary words and fast rho-orbit sizes.

A word with one-run encoding a_0..a_k is split digit-wise as
a_i = r_i + m q_i.  The remainder word r and the binary word whose one-run
encoding is q determine the word, and rho acts on the pair by the simpler
map ``theta``: rotate both when the quotient word starts with 0, only the
quotient word otherwise.  Orbit sizes are then products of two necklace
periods.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .bitword import (
    BinaryWord,
    all_words,
    as_word,
    bits_from_ore,
    necklace_min,
    necklace_period,
    ore_bits,
)
from .grot import rho_bits, rho_orbit_bits
from .report import CheckReport

#: Default largest n accepted by ``decompose_space``.
MAX_CENSUS_N = 24


@dataclass(frozen=True)
class EncodedPair:
    """(remainder word, binary quotient word) for a fixed m.

    ``bqw`` is kept as a raw bit tuple because it is empty for the all-ones
    words shorter than m that the toggle module encodes.
    """

    rw: tuple[int, ...]
    bqw: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if not self.rw:
            raise ValueError("remainder word is empty")
        for i, r in enumerate(self.rw):
            if not 0 <= r < self.m:
                raise ValueError(f"remainder {r} at index {i} outside [0, {self.m})")
        for b in self.bqw:
            if b not in (0, 1):
                raise ValueError(f"non-binary letter {b!r} in quotient word")
        zeros = len(self.bqw) - sum(self.bqw)
        if zeros != len(self.rw) - 1:
            raise ValueError(
                f"quotient word has {zeros} zeros but remainder word has length {len(self.rw)}"
            )

    @property
    def k(self) -> int:
        return len(self.rw) - 1

    @property
    def n(self) -> int:
        """Length of the decoded word."""
        return self.k + self.m * sum(self.bqw) + sum(self.rw)

    @property
    def qw(self) -> tuple[int, ...]:
        return ore_bits(self.bqw)

    def rw_str(self) -> str:
        return "".join(map(str, self.rw))

    def bqw_str(self) -> str:
        return "".join(map(str, self.bqw))


def encode_bits(bits: tuple[int, ...], m: int) -> EncodedPair:
    parts = ore_bits(bits)
    rw = tuple(a % m for a in parts)
    qw = tuple(a // m for a in parts)
    return EncodedPair(rw, bits_from_ore(qw), m)


def decode_bits(pair: EncodedPair) -> tuple[int, ...]:
    qw = ore_bits(pair.bqw)
    return bits_from_ore(r + pair.m * q for r, q in zip(pair.rw, qw))


def encode(w: BinaryWord, m: int) -> EncodedPair:
    w = as_word(w)
    if not 1 <= m <= len(w):
        raise ValueError(f"m must satisfy 1 <= m <= {len(w)}, got {m}")
    return encode_bits(w.bits, m)


def decode(pair: EncodedPair) -> BinaryWord:
    return BinaryWord(decode_bits(pair))


def theta(pair: EncodedPair) -> EncodedPair:
    b = pair.bqw
    if not b:
        return pair
    rw = pair.rw[1:] + pair.rw[:1] if b[0] == 0 else pair.rw
    return EncodedPair(rw, b[1:] + b[:1], pair.m)


def check_conjugacy(w: BinaryWord, m: int) -> CheckReport:
    """encode(rho(u)) == theta(encode(u)) along the whole orbit of w."""
    w = as_word(w)
    if not 1 <= m <= len(w):
        raise ValueError(f"m must satisfy 1 <= m <= {len(w)}, got {m}")
    report = CheckReport("conjugacy", {"word": str(w), "m": m})
    for u in rho_orbit_bits(w.bits, m):
        lhs = encode_bits(rho_bits(u, m), m)
        rhs = theta(encode_bits(u, m))
        report.add(
            "".join(map(str, u)), lhs == rhs,
            lhs=[lhs.rw_str(), lhs.bqw_str()], rhs=[rhs.rw_str(), rhs.bqw_str()],
        )
    return report


def orbit_size_bits(bits: tuple[int, ...], m: int) -> int:
    pair = encode_bits(bits, m)
    t = necklace_period(pair.bqw) if pair.bqw else 1
    return necklace_period(pair.rw) * t


def orbit_size(w: BinaryWord, m: int) -> int:
    w = as_word(w)
    if not 1 <= m <= len(w):
        raise ValueError(f"m must satisfy 1 <= m <= {len(w)}, got {m}")
    return orbit_size_bits(w.bits, m)


def max_orbit_size(n: int, m: int) -> int:
    """Largest rho-orbit in {0,1}^n: max((n-m)^2, n) for m >= 2.

    For m = 1 every remainder is 0, rho is the ordinary rotation and the
    answer is n; the square term would overshoot once n >= 3.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if m == 1:
        return n
    return max((n - m) ** 2, n)


def max_orbit_witness(n: int, m: int) -> BinaryWord:
    """A word whose orbit has size ``max_orbit_size(n, m)``."""
    if m >= 2 and (n - m) ** 2 > n:
        return BinaryWord((1,) * (m + 1) + (0,) * (n - m - 1))
    return BinaryWord((1,) + (0,) * (n - 1))


def _bounded_sequences(length: int, total: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Tuples of the given length with entries in [0, bound) summing to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if total > (bound - 1) * length:
        return
    for first in range(min(bound - 1, total), -1, -1):
        for rest in _bounded_sequences(length - 1, total - first, bound):
            yield (first,) + rest


def _necklace_reps(seqs: Iterator[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    for s in seqs:
        if necklace_min(s) == s:
            yield s


def _census_slow(n: int, m: int) -> list[tuple[BinaryWord, int]]:
    seen: set[tuple[int, ...]] = set()
    out = []
    for bits in all_words(n):
        if bits in seen:
            continue
        orb = rho_orbit_bits(bits, m)
        seen.update(orb)
        out.append((BinaryWord(bits), len(orb)))
    return out


def _census_fast(n: int, m: int) -> list[tuple[BinaryWord, int]]:
    """One orbit per pair (remainder necklace, quotient necklace) in P_k.

    theta^t, with t the quotient period, rotates the remainder word by the
    number of zeros in one quotient period, which is prime to k+1; so each
    pair of necklaces is exactly one orbit of size s*t.  The representative
    is the least decoded word over the s*t pairs of the orbit.
    """
    out = []
    for k in range(n + 1):
        for ones in range((n - k) // m + 1):
            rsum = n - k - m * ones
            length = k + ones
            bqws = [
                tuple(0 if i in zeros else 1 for i in range(length))
                for zeros in combinations(range(length), k)
            ]
            for b in _necklace_reps(iter(bqws)):
                t = necklace_period(b) if b else 1
                for r in _necklace_reps(_bounded_sequences(k + 1, rsum, m)):
                    s = necklace_period(r)
                    pair = EncodedPair(r, b, m)
                    best = decode_bits(pair)
                    for _ in range(s * t - 1):
                        pair = theta(pair)
                        best = min(best, decode_bits(pair))
                    out.append((BinaryWord(best), s * t))
    out.sort(key=lambda e: e[0].bits)
    return out


def decompose_space(
    n: int, m: int, fast: bool = False, cap: int = MAX_CENSUS_N
) -> list[tuple[BinaryWord, int]]:
    """Partition {0,1}^n into rho-orbits.

    Returns (least member, orbit size) pairs sorted by representative.  The
    default walks words in order with a visited set; ``fast=True`` walks the
    encoded classes instead and never applies rho.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the census cap {cap}")
    return _census_fast(n, m) if fast else _census_slow(n, m)
