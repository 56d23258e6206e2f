"""The generalized rotation rho and the bookkeeping around its orbits.

``rho_bits`` is the kernel on raw bit tuples.  It is also defined on words
shorter than m, which the toggle module needs for its snake words; there the
all-ones word (no zero to stop at, not enough ones to move) is a fixed point.
The public functions take ``BinaryWord`` and insist on 1 <= m <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitword import BinaryWord, as_word, reverse


def leading_ones(bits: Sequence[int]) -> int:
    k = 0
    for b in bits:
        if not b:
            break
        k += 1
    return k


def rho_bits(bits: tuple[int, ...], m: int) -> tuple[int, ...]:
    k = leading_ones(bits)
    if k < m and k < len(bits):
        # prefix 1^k 0 goes to the tail as 0 1^k
        return bits[k + 1:] + (0,) + (1,) * k
    if k >= m:
        return bits[m:] + (1,) * m
    return bits


def rho_orbit_bits(bits: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    cap = 1 << len(bits)
    out = [bits]
    cur = rho_bits(bits, m)
    while cur != bits:
        out.append(cur)
        if len(out) > cap:
            raise RuntimeError(f"orbit of {bits} exceeded 2**n elements")
        cur = rho_bits(cur, m)
    return out


def _check_m(w: BinaryWord, m: int) -> None:
    if not 1 <= m <= len(w):
        raise ValueError(f"m must satisfy 1 <= m <= {len(w)}, got {m}")


def rotate(w: BinaryWord, m: int) -> BinaryWord:
    w = as_word(w)
    _check_m(w, m)
    return BinaryWord(rho_bits(w.bits, m))


def rotate_inv(w: BinaryWord, m: int) -> BinaryWord:
    """Inverse of ``rotate``: reverse, rotate, reverse."""
    w = as_word(w)
    _check_m(w, m)
    return reverse(rotate(reverse(w), m))


@dataclass(frozen=True)
class Orbit:
    words: tuple[BinaryWord, ...]
    m: int

    @property
    def p(self) -> int:
        return len(self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return as_word(w) in set(self.words)


def orbit(w: BinaryWord, m: int) -> Orbit:
    w = as_word(w)
    _check_m(w, m)
    return Orbit(tuple(BinaryWord(b) for b in rho_orbit_bits(w.bits, m)), m)


@dataclass(frozen=True)
class ExtensionTrace:
    """The word w^(p) together with its c-sequence.

    ``bar`` drops the final n letters of ``full`` and ``hat`` drops the first
    n; both have length ``l`` and are read cyclically.
    """

    full: tuple[int, ...]
    c: tuple[int, ...]
    n: int
    m: int

    @property
    def l(self) -> int:
        return self.c[-1]

    @property
    def p(self) -> int:
        return len(self.c) - 1

    @property
    def bar(self) -> BinaryWord:
        return BinaryWord(self.full[:self.l])

    @property
    def hat(self) -> BinaryWord:
        return BinaryWord(self.full[self.n:])

    def window(self, k: int) -> BinaryWord:
        """rho^k(w) read off ``full``."""
        return BinaryWord(self.full[self.c[k]:self.c[k] + self.n])


def extension_trace(w: BinaryWord, m: int) -> ExtensionTrace:
    w = as_word(w)
    _check_m(w, m)
    n = len(w)
    full = list(w.bits)
    c = [0]
    cur = w.bits
    cap = 1 << n
    while True:
        k = leading_ones(cur)
        full.extend((0,) + (1,) * k if k < m else (1,) * m)
        cur = tuple(full[-n:])
        c.append(len(full) - n)
        if cur == w.bits:
            break
        if len(c) > cap + 1:
            raise RuntimeError(f"extension of {w} did not close within 2**n steps")
    return ExtensionTrace(tuple(full), tuple(c), n, m)


@dataclass(frozen=True)
class IndexDecomposition:
    i0: frozenset[int]
    it: frozenset[int]
    ih: frozenset[int]
    hat_i0: frozenset[int]
    hat_it: frozenset[int]
    hat_ih: frozenset[int]

    def part(self, label: str, hatted: bool = False) -> frozenset[int]:
        label = {"0": "i0", "T": "it", "H": "ih"}[str(label)]
        return getattr(self, "hat_" + label if hatted else label)


def index_decomposition(t: ExtensionTrace, m: int | None = None) -> IndexDecomposition:
    """Split the cyclic positions of bar and hat into zero / tail / head sets.

    Tail positions of bar are the ones sitting just before an orbit start
    (c_k - 1); tail positions of hat are the ones sitting at an orbit start.
    """
    if m is not None and m != t.m:
        raise ValueError(f"trace was built with m={t.m}, not {m}")
    l = t.l
    bar, hat = t.full[:l], t.full[t.n:]
    starts = set(t.c[:-1])
    before_starts = {(ck - 1) % l for ck in starts}

    i0 = frozenset(i for i in range(l) if bar[i] == 0)
    it = frozenset(i for i in range(l) if bar[i] == 1 and i in before_starts)
    ih = frozenset(range(l)) - i0 - it
    hat_i0 = frozenset(i for i in range(l) if hat[i] == 0)
    hat_it = frozenset(i for i in range(l) if hat[i] == 1 and i in starts)
    hat_ih = frozenset(range(l)) - hat_i0 - hat_it
    return IndexDecomposition(i0, it, ih, hat_i0, hat_it, hat_ih)
