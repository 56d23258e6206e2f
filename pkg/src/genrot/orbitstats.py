"""Cumulative-sum statistics over rho-orbits and checks of their symmetry.

Multiset union below is additive (multiplicities add), which is what the
L/R decompositions into M_{a,b} blocks require.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .bitword import BinaryWord, as_word
from .grot import (
    ExtensionTrace,
    IndexDecomposition,
    extension_trace,
    index_decomposition,
    rho_orbit_bits,
)
from .report import CheckReport

LABELS = ("0", "T", "H")


class IntMultiset:
    """Finite multiset of non-negative integers stored as value -> count."""

    __slots__ = ("_counts",)

    def __init__(self, values: Iterable[int] = ()):
        counts = Counter()
        for v in values:
            v = int(v)
            if v < 0:
                raise ValueError(f"negative element {v}")
            counts[v] += 1
        self._counts = dict(sorted(counts.items()))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> IntMultiset:
        ms = cls()
        for v, c in counts.items():
            if v < 0 or c < 0:
                raise ValueError(f"bad entry {v}: {c}")
        ms._counts = dict(sorted((int(v), int(c)) for v, c in counts.items() if c))
        return ms

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def count(self, v: int) -> int:
        return self._counts.get(v, 0)

    def __len__(self):
        return sum(self._counts.values())

    def __iter__(self) -> Iterator[int]:
        for v, c in self._counts.items():
            for _ in range(c):
                yield v

    def elements(self) -> list[int]:
        return list(self)

    def __eq__(self, other):
        if not isinstance(other, IntMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __add__(self, other: IntMultiset) -> IntMultiset:
        merged = Counter(self._counts)
        merged.update(other._counts)
        return IntMultiset.from_counts(merged)

    def shift(self, delta: int) -> IntMultiset:
        """Add ``delta`` to every element; a negative result is a bug upstream."""
        if self._counts and min(self._counts) + delta < 0:
            raise ValueError(f"shift by {delta} makes {min(self._counts)} negative")
        return IntMultiset.from_counts({v + delta: c for v, c in self._counts.items()})

    def __repr__(self):
        inner = ", ".join(f"{v}x{c}" for v, c in self._counts.items())
        return f"IntMultiset({{{inner}}})"


def union(*parts: IntMultiset) -> IntMultiset:
    out = IntMultiset()
    for p in parts:
        out = out + p
    return out


def _orbit_bits(w, m):
    w = as_word(w)
    if not 1 <= m <= len(w):
        raise ValueError(f"m must satisfy 1 <= m <= {len(w)}, got {m}")
    return w, rho_orbit_bits(w.bits, m)


def _check_j(j, n):
    if not 0 <= j <= n:
        raise ValueError(f"j must lie in 0..{n}, got {j}")


def left_multiset(w: BinaryWord, m: int, j: int) -> IntMultiset:
    w, orb = _orbit_bits(w, m)
    _check_j(j, len(w))
    return IntMultiset(sum(u[:j]) for u in orb)


def right_multiset(w: BinaryWord, m: int, j: int) -> IntMultiset:
    w, orb = _orbit_bits(w, m)
    _check_j(j, len(w))
    n = len(w)
    return IntMultiset(sum(u[n - j:]) for u in orb)


def cumulative_sums(orb: list[tuple[int, ...]], right: bool = False) -> np.ndarray:
    """p x (n+1) array of left (or right) prefix sums of the orbit words."""
    arr = np.array(orb, dtype=np.int64)
    if right:
        arr = arr[:, ::-1]
    out = np.zeros((arr.shape[0], arr.shape[1] + 1), dtype=np.int64)
    np.cumsum(arr, axis=1, out=out[:, 1:])
    return out


def frequency_from_sums(sums: np.ndarray, a: int) -> np.ndarray:
    p, cols = sums.shape
    table = np.zeros((a + 1, cols), dtype=np.int64)
    for j in range(cols):
        table[:, j] = np.bincount(sums[:, j], minlength=a + 1)
    return table


def frequency_table(w: BinaryWord, m: int, right: bool = False) -> np.ndarray:
    """Table of nu_{L^(j)}(s): rows s = 0..a(w), columns j = 0..n.

    With ``right=True`` the right cumulative sums are tabulated instead.
    """
    w, orb = _orbit_bits(w, m)
    return frequency_from_sums(cumulative_sums(orb, right), sum(w))


def _window_sum(word: tuple[int, ...], start: int, j: int, step: int) -> int:
    l = len(word)
    return sum(word[(start + step * i) % l] for i in range(j))


def m_ab(
    trace: ExtensionTrace,
    decomp: IndexDecomposition,
    j: int,
    a: str,
    b: str,
    hatted: bool = False,
) -> IntMultiset:
    """The block multiset M^(j)_{a,b} (or its hatted twin).

    Unhatted: sums of j letters of bar read forward from k in I_a, ending at
    k+j-1 in I_b.  Hatted: sums of j letters of hat read backward from k in
    Ihat_a, ending at k-j+1 in Ihat_b.
    """
    if not 1 <= j <= trace.n:
        raise ValueError(f"j must lie in 1..{trace.n}, got {j}")
    l = trace.l
    ends = decomp.part(b, hatted)
    if hatted:
        word = trace.full[trace.n:]
        return IntMultiset(
            _window_sum(word, k, j, -1)
            for k in sorted(decomp.part(a, True))
            if (k - j + 1) % l in ends
        )
    word = trace.full[:l]
    return IntMultiset(
        _window_sum(word, k, j, 1)
        for k in sorted(decomp.part(a))
        if (k + j - 1) % l in ends
    )


def m_table(trace: ExtensionTrace, decomp: IndexDecomposition, j: int, hatted: bool = False):
    """All nine blocks for one j, keyed by (a, b)."""
    return {(a, b): m_ab(trace, decomp, j, a, b, hatted) for a, b in product(LABELS, LABELS)}


def left_from_blocks(trace, decomp, j: int, hatted: bool = False) -> IntMultiset:
    """Reassemble L^(j) (or R^(j) when hatted) from the (j+1)-blocks."""
    blocks = m_table(trace, decomp, j + 1, hatted)
    zero_rows = union(*(blocks["0", b] for b in LABELS))
    tail_rows = union(*(blocks["T", b] for b in LABELS))
    return zero_rows + tail_rows.shift(-1)


def _ms(x: IntMultiset):
    return x.elements()


def check_theorem1(w: BinaryWord, m: int) -> CheckReport:
    w, orb = _orbit_bits(w, m)
    left = cumulative_sums(orb)
    right = cumulative_sums(orb, right=True)
    report = CheckReport("theorem1", {"word": str(w), "m": m})
    for j in range(len(w) + 1):
        lj = IntMultiset(left[:, j])
        rj = IntMultiset(right[:, j])
        report.add(f"j={j}", lj == rj, left=_ms(lj), right=_ms(rj))
    return report


def check_corollary_column_sums(w: BinaryWord, m: int) -> CheckReport:
    w, orb = _orbit_bits(w, m)
    cols = np.array(orb, dtype=np.int64).sum(axis=0)
    n = len(w)
    report = CheckReport("corollary", {"word": str(w), "m": m})
    for j in range(n):
        report.add(f"j={j}", cols[j] == cols[n - 1 - j],
                   column=int(cols[j]), mirror=int(cols[n - 1 - j]))
    return report


def check_reflection(w: BinaryWord, m: int) -> CheckReport:
    """nu_{L^(j)}(s) = nu_{L^(n-j)}(a - s), plus the midpoint case for even n."""
    w, orb = _orbit_bits(w, m)
    a, n = sum(w), len(w)
    table = frequency_from_sums(cumulative_sums(orb), a)
    report = CheckReport("reflection", {"word": str(w), "m": m})
    for j in range(n + 1):
        report.add(f"j={j}", np.array_equal(table[:, j], table[::-1, n - j]),
                   column=table[:, j].tolist(), mirror=table[::-1, n - j].tolist())
    if n % 2 == 0:
        mid = table[:, n // 2]
        report.add("midpoint", np.array_equal(mid, mid[::-1]), column=mid.tolist())
    return report


def check_lemma_identities(w: BinaryWord, m: int) -> CheckReport:
    """Block-multiset identities behind L(j) = R(j), for j = 1..n.

    Checks the nine block equalities, the 00/TT pair, the four-term union,
    emptiness of the 0T block for j <= m, the row and column sum identities,
    the 0T/TT union, the j = 1 shape, and the L/R reassembly from blocks.
    """
    w = as_word(w)
    n = len(w)
    trace = extension_trace(w, m)
    decomp = index_decomposition(trace)
    report = CheckReport("lemmas", {"word": str(w), "m": m})
    orb = rho_orbit_bits(w.bits, m)
    left = cumulative_sums(orb)
    right = cumulative_sums(orb, right=True)

    blocks = {j: m_table(trace, decomp, j) for j in range(1, n + 1)}
    hblocks = {j: m_table(trace, decomp, j, True) for j in range(1, n + 1)}

    def both(label, lhs, rhs):
        report.add(label, lhs == rhs, lhs=_ms(lhs), rhs=_ms(rhs))

    for j in range(1, n + 1):
        M, H = blocks[j], hblocks[j]
        for a, b in product(LABELS, LABELS):
            both(f"j={j} block {a}{b}", M[a, b], H[a, b])
        both(f"j={j} pair 00", M["0", "0"], H["0", "0"])
        both(f"j={j} pair TT", M["T", "T"], H["T", "T"])

        def four(X):
            return union(X["0", "0"], X["0", "T"], X["T", "0"].shift(-1), X["T", "T"].shift(-1))

        both(f"j={j} four-term union", four(M), four(H))
        if j <= m:
            report.add(f"j={j} 0T empty", len(M["0", "T"]) == 0 and len(H["0", "T"]) == 0,
                       lhs=_ms(M["0", "T"]), rhs=_ms(H["0", "T"]))
        both(f"j={j} 0T/TT union",
             M["0", "T"] + M["T", "T"].shift(-1), H["0", "T"] + H["T", "T"].shift(-1))
        if j > 1:
            for x in LABELS:
                both(f"j={j} row {x}",
                     union(M[x, "0"], M[x, "T"].shift(-1), M[x, "H"].shift(-1)),
                     union(H[x, "0"], H[x, "T"].shift(-1), H[x, "H"].shift(-1)))
                both(f"j={j} column {x}",
                     union(M["0", x], M["T", x].shift(-1), M["H", x].shift(-1)),
                     union(H["0", x], H["T", x].shift(-1), H["H", x].shift(-1)))
        if j == 1:
            ok = True
            for a, b in product(LABELS, LABELS):
                size = len(decomp.part(a))
                if a != b:
                    want = IntMultiset()
                else:
                    want = IntMultiset([0 if a == "0" else 1] * size)
                ok = ok and M[a, b] == want and H[a, b] == want
            report.add("j=1 shape", ok)
        if j < n:
            both(f"j={j} L from blocks", left_from_blocks(trace, decomp, j), IntMultiset(left[:, j]))
            both(f"j={j} R from blocks",
                 left_from_blocks(trace, decomp, j, hatted=True), IntMultiset(right[:, j]))
    both("j=0 L from blocks", left_from_blocks(trace, decomp, 0), IntMultiset(left[:, 0]))
    return report


def check_alternative_expressions(w: BinaryWord, m: int) -> CheckReport:
    """L^(j) and R^(j) read off bar/hat at the zero-or-tail positions."""
    w = as_word(w)
    n = len(w)
    trace = extension_trace(w, m)
    d = index_decomposition(trace)
    l = trace.l
    bar, hat = trace.full[:l], trace.full[n:]
    orb = rho_orbit_bits(w.bits, m)
    left = cumulative_sums(orb)
    right = cumulative_sums(orb, right=True)
    report = CheckReport("alternative", {"word": str(w), "m": m})
    for j in range(n + 1):
        alt_l = IntMultiset(_window_sum(bar, k + 1, j, 1) for k in d.i0 | d.it)
        alt_r = IntMultiset(_window_sum(hat, k - 1, j, -1) for k in d.hat_i0 | d.hat_it)
        report.add(f"j={j} left", alt_l == IntMultiset(left[:, j]), alt=_ms(alt_l))
        report.add(f"j={j} right", alt_r == IntMultiset(right[:, j]), alt=_ms(alt_r))
    return report
