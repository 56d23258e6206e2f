"""Toggle dynamics on generalized independent sets of a path, and snakes.

X_N (for a fixed m) holds the words of length N whose ones are pairwise
more than m apart.  ``phi`` toggles positions 0, 1, ..., N-1 in turn.  The
rows of a phi-orbit stacked top to bottom form the orbit board; its ones
split into snakes running from column 0 to column N-1, each read as a word
over {0, 1} (step m+1 -> 0, step 1 -> 1).  Successive snakes are successive
rho-images, which is what turns rho-orbit statistics into column sums of
the board.

Boards over X_L use columns 0..L-1, so snake compositions sum to L-1 and
snake words lie in Y_{L-1} = {w : a(w) + (m+1) b(w) = L-1}.

Z_N (no m+1 consecutive ones) is supported for the empirical symmetry
experiment only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .bitword import BinaryWord, as_word
from .encoding import encode_bits
from .grot import leading_ones, rho_bits, rho_orbit_bits
from .orbitstats import cumulative_sums, frequency_from_sums
from .report import CheckReport

#: Default largest N accepted by the X_N / Z_N enumerations.
MAX_TOGGLE_N = 30

Bits = tuple[int, ...]


# -- state spaces ----------------------------------------------------------

def in_X(bits: Sequence[int], m: int) -> bool:
    last = None
    for i, b in enumerate(bits):
        if b:
            if last is not None and i - last <= m:
                return False
            last = i
    return True


def in_Z(bits: Sequence[int], m: int) -> bool:
    run = 0
    for b in bits:
        run = run + 1 if b else 0
        if run > m:
            return False
    return True


def violated_window(bits: Sequence[int], m: int) -> tuple[int, int] | None:
    """First pair of ones at distance <= m, or None for a member of X_N."""
    last = None
    for i, b in enumerate(bits):
        if b:
            if last is not None and i - last <= m:
                return last, i
            last = i
    return None


def _can_set_X(bits: Sequence[int], i: int, m: int) -> bool:
    lo, hi = max(0, i - m), min(len(bits), i + m + 1)
    return not any(bits[lo:hi])


def _can_set_Z(bits: Sequence[int], i: int, m: int) -> bool:
    left = 0
    j = i - 1
    while j >= 0 and bits[j]:
        left += 1
        j -= 1
    right = 0
    j = i + 1
    while j < len(bits) and bits[j]:
        right += 1
        j += 1
    return left + right + 1 <= m


def _check_N(N, m, cap=MAX_TOGGLE_N):
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if N < m:
        raise ValueError(f"need N >= m, got N={N}, m={m}")
    if N > cap:
        raise ValueError(f"N={N} exceeds the cap {cap}")


def _enumerate(N: int, ok: Callable[[list[int], int], bool]) -> Iterator[Bits]:
    word: list[int] = []

    def rec():
        if len(word) == N:
            yield tuple(word)
            return
        for b in (0, 1):
            word.append(b)
            if ok(word, len(word) - 1):
                yield from rec()
            word.pop()

    yield from rec()


@dataclass(frozen=True)
class ToggleWord:
    bits: BinaryWord
    m: int
    space: str = "X"

    def __post_init__(self):
        bits = as_word(self.bits)
        object.__setattr__(self, "bits", bits)
        if self.space not in ("X", "Z"):
            raise ValueError(f"unknown space {self.space!r}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.space == "X":
            bad = violated_window(bits.bits, self.m)
            if bad is not None:
                i, j = bad
                raise ValueError(
                    f"{bits} is not in X_{len(bits)} for m={self.m}: "
                    f"ones at {i} and {j} are within distance {self.m}"
                )
        elif not in_Z(bits.bits, self.m):
            raise ValueError(f"{bits} has more than {self.m} consecutive ones")

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return str(self.bits)


def enumerate_X(N: int, m: int, cap: int = MAX_TOGGLE_N) -> list[ToggleWord]:
    """All of X_N in lexicographic order."""
    _check_N(N, m, cap)

    def ok(prefix, i):
        return not prefix[i] or not any(prefix[max(0, i - m):i])

    return [ToggleWord(BinaryWord(b), m) for b in _enumerate(N, ok)]


def enumerate_Z(N: int, m: int, cap: int = MAX_TOGGLE_N) -> list[ToggleWord]:
    if N < 1 or m < 1:
        raise ValueError(f"need N >= 1 and m >= 1, got N={N}, m={m}")
    if N > cap:
        raise ValueError(f"N={N} exceeds the cap {cap}")

    def ok(prefix, i):
        return i < m or not all(prefix[i - m:i + 1])

    return [ToggleWord(BinaryWord(b), m, "Z") for b in _enumerate(N, ok)]


# -- toggles ---------------------------------------------------------------

def toggle_bits(bits: Bits, i: int, m: int, space: str = "X") -> Bits:
    if bits[i]:
        # removing a one never leaves either space
        return bits[:i] + (0,) + bits[i + 1:]
    can = _can_set_X if space == "X" else _can_set_Z
    if can(bits, i, m):
        return bits[:i] + (1,) + bits[i + 1:]
    return bits


def phi_bits(bits: Bits, m: int, space: str = "X") -> Bits:
    w = list(bits)
    can = _can_set_X if space == "X" else _can_set_Z
    for i in range(len(w)):
        if w[i]:
            w[i] = 0
        elif can(w, i, m):
            w[i] = 1
    return tuple(w)


def phi_orbit_bits(bits: Bits, m: int, space: str = "X") -> list[Bits]:
    out = [bits]
    cur = phi_bits(bits, m, space)
    while cur != bits:
        out.append(cur)
        if len(out) > 1 << len(bits):
            raise RuntimeError(f"phi-orbit of {bits} did not close")
        cur = phi_bits(cur, m, space)
    return out


def toggle_at(w: ToggleWord, i: int) -> ToggleWord:
    if not 0 <= i < len(w):
        raise ValueError(f"toggle index {i} outside 0..{len(w) - 1}")
    return ToggleWord(BinaryWord(toggle_bits(w.bits.bits, i, w.m, w.space)), w.m, w.space)


def phi(w: ToggleWord) -> ToggleWord:
    return ToggleWord(BinaryWord(phi_bits(w.bits.bits, w.m, w.space)), w.m, w.space)


# -- boards and snakes ------------------------------------------------------

@dataclass(frozen=True)
class OrbitBoard:
    """Rows phi^0(S), ..., phi^(q-1)(S) as a q x N uint8 array."""

    rows: np.ndarray
    m: int
    space: str = "X"

    @property
    def q(self) -> int:
        return self.rows.shape[0]

    @property
    def N(self) -> int:
        return self.rows.shape[1]

    def __call__(self, i: int, j: int) -> int:
        """Board entry with the row taken mod q; columns off the board read 0."""
        if not 0 <= j < self.N:
            return 0
        return int(self.rows[i % self.q, j])

    def column_sums(self) -> np.ndarray:
        return self.rows.sum(axis=0, dtype=np.int64)

    def row_words(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.rows]


def orbit_board(S: ToggleWord) -> OrbitBoard:
    orb = phi_orbit_bits(S.bits.bits, S.m, S.space)
    return OrbitBoard(np.array(orb, dtype=np.uint8), S.m, S.space)


@dataclass(frozen=True)
class Snake:
    cells: tuple[tuple[int, int], ...]
    composition: tuple[int, ...]

    @property
    def start_row(self) -> int:
        return self.cells[0][0]


class SnakeError(RuntimeError):
    """A board violated the forward/backward successor dichotomy."""


def _forward(board: OrbitBoard, i: int, j: int) -> tuple[int, int]:
    right = board(i, j + board.m + 1)
    down = board(i + 1, j + 1)
    if right == down:
        raise SnakeError(
            f"cell ({i % board.q},{j}) has {'both' if right else 'neither'} successors"
        )
    return (i, j + board.m + 1) if right else ((i + 1) % board.q, j + 1)


def _backward(board: OrbitBoard, i: int, j: int) -> tuple[int, int]:
    left = board(i, j - board.m - 1) if j - board.m - 1 >= 0 else 0
    up = board(i - 1, j - 1)
    if left == up:
        raise SnakeError(
            f"cell ({i % board.q},{j}) has {'both' if left else 'neither'} predecessors"
        )
    return (i, j - board.m - 1) if left else ((i - 1) % board.q, j - 1)


def _check_tail(board: OrbitBoard, i: int) -> None:
    """A one in the last column is followed two rows later by exactly one
    one at distance d in [m, 2m] from the last column."""
    N, m = board.N, board.m
    hits = [d for d in range(m, 2 * m + 1) if N - 1 - d >= 0 and board(i + 2, N - 1 - d)]
    if len(hits) != 1:
        raise SnakeError(f"last-column one at row {i % board.q}: tail offsets {hits}")


def find_snakes(board: OrbitBoard, check_tail: bool = True) -> list[Snake]:
    """All snakes of an X-board, ordered by their starting row in column 0.

    Every one-cell is checked against the forward and backward dichotomy;
    a violation, or a one left outside every snake, raises SnakeError.
    ``check_tail`` also checks the last-column rule, which needs N > 2m.
    """
    if board.space != "X":
        raise ValueError("snakes are only defined on X boards")
    q, N, m = board.q, board.N, board.m
    owner = -np.ones((q, N), dtype=np.int64)
    snakes = []
    for i in range(q):
        if not board.rows[i, 0]:
            continue
        cells = [(i, 0)]
        parts = []
        r, j = i, 0
        while j != N - 1:
            r2, j2 = _forward(board, r, j)
            parts.append(j2 - j)
            r, j = r2, j2
            cells.append((r, j))
        for r, j in cells:
            if owner[r, j] >= 0:
                raise SnakeError(f"cell ({r},{j}) lies on two snakes")
            owner[r, j] = len(snakes)
        snakes.append(Snake(tuple(cells), tuple(parts)))

    for r, j in zip(*np.nonzero(board.rows)):
        r, j = int(r), int(j)
        if owner[r, j] < 0:
            raise SnakeError(f"cell ({r},{j}) lies on no snake")
        if j:
            pr, pj = _backward(board, r, j)
            if owner[pr, pj] != owner[r, j]:
                raise SnakeError(f"backward step from ({r},{j}) leaves its snake")
        if check_tail and j == N - 1 and N > 2 * m:
            _check_tail(board, r)
    return snakes


def snake_tilde(c: Sequence[int], m: int) -> BinaryWord:
    """Composition over {1, m+1} -> word over {1, 0}."""
    out = []
    for i, part in enumerate(c):
        if part == 1:
            out.append(1)
        elif part == m + 1:
            out.append(0)
        else:
            raise ValueError(f"part {part} at index {i} is neither 1 nor {m + 1}")
    return BinaryWord(tuple(out))


def tilde_bits(c: Sequence[int], m: int) -> Bits:
    return tuple(1 if part == 1 else 0 for part in c)


def in_Y(bits: Sequence[int], n: int, m: int) -> bool:
    a = sum(bits)
    return a + (m + 1) * (len(bits) - a) == n


def enumerate_Y(n: int, m: int) -> list[Bits]:
    """All of Y_n (words of mixed length), shortest first then lexicographic."""
    out = []
    for zeros in range(n // (m + 1) + 1):
        ones = n - (m + 1) * zeros
        length = ones + zeros
        for x in range(1 << length):
            bits = tuple((x >> (length - 1 - i)) & 1 for i in range(length))
            if sum(bits) == ones:
                out.append(bits)
    out.sort(key=lambda b: (len(b), b))
    return out


def _require_snakes(S: ToggleWord) -> None:
    if S.space != "X":
        raise ValueError("snake checks need a word of X_N")
    if len(S) < 2:
        raise ValueError("snake words need a board with at least two columns")


def check_snake_rotation(S: ToggleWord) -> CheckReport:
    """Successive snakes are rho-successors and their start rows advance by
    min(k, m) + 2, k being the leading run of ones of the snake word."""
    _require_snakes(S)
    m = S.m
    board = orbit_board(S)
    snakes = find_snakes(board)
    words = [tilde_bits(s.composition, m) for s in snakes]
    report = CheckReport("snake", {"word": str(S), "m": m, "N": len(S)})
    if not snakes:
        report.add("has snakes", False, q=board.q)
        return report
    for w in words:
        report.add(f"{''.join(map(str, w))} in Y_{len(S) - 1}", in_Y(w, len(S) - 1, m))
    count = len(snakes)
    for t in range(count):
        w, nxt = words[t], words[(t + 1) % count]
        step = (snakes[(t + 1) % count].start_row - snakes[t].start_row) % board.q
        if count == 1:
            step = board.q
        k = leading_ones(w)
        want = min(k, m) + 2
        report.add(f"rho step {t}", rho_bits(w, m) == nxt,
                   word="".join(map(str, w)), next="".join(map(str, nxt)))
        report.add(f"row step {t}", step == want, step=step, expected=want)
    p = len(rho_orbit_bits(words[0], m))
    report.add("one snake per orbit element", p == count, orbit=p, snakes=count)
    return report


def check_phi_symmetry(S: ToggleWord) -> CheckReport:
    board = orbit_board(S)
    cols = board.column_sums()
    N = board.N
    report = CheckReport(
        "phi-symmetry" if S.space == "X" else "z-symmetry",
        {"word": str(S), "m": S.m, "N": N},
        experimental=S.space == "Z",
    )
    for i in range(N):
        report.add(f"i={i}", cols[i] == cols[N - 1 - i],
                   column=int(cols[i]), mirror=int(cols[N - 1 - i]))
    return report


def check_Z_symmetry(z, m: int) -> CheckReport:
    """Column-sum symmetry on Z_N.  Empirical evidence for a conjecture."""
    if not isinstance(z, ToggleWord):
        z = ToggleWord(as_word(z), m, "Z")
    return check_phi_symmetry(z)


def base_word(S: ToggleWord) -> Bits:
    """Snake word of the first snake (smallest start row) on the board of S."""
    _require_snakes(S)
    snakes = find_snakes(orbit_board(S))
    return tilde_bits(snakes[0].composition, S.m)


def frequency_terms(w: Bits, m: int, i: int) -> list[tuple[int, int]]:
    """(j, s) pairs with i = (m+1) j - m s, i.e. s = j - (i-j)/m, 0 <= j <= |w|."""
    a = sum(w)
    terms = []
    for j in range(len(w) + 1):
        d = i - j
        if d < 0 or d % m:
            continue
        s = j - d // m
        if 0 <= s <= a:
            terms.append((j, s))
    return terms


def column_sums_via_frequency(S: ToggleWord) -> list[int]:
    """Board column sums rebuilt from the frequency table of the snake word.

    Column i collects nu_{L^(j)}(j - (i-j)/m) over the j with (i-j) a
    non-negative multiple of m, j running up to and including |w|.
    """
    _require_snakes(S)
    w = base_word(S)
    m = S.m
    orb = rho_orbit_bits(w, m)
    table = frequency_from_sums(cumulative_sums(orb), sum(w))
    return [
        int(sum(table[s, j] for j, s in frequency_terms(w, m, i)))
        for i in range(len(S))
    ]


def _first_snake_word(bits: Bits, m: int) -> Bits | None:
    """Generate phi-iterates only until one snake is complete."""
    N = len(bits)
    rows = [bits]

    def row(i):
        while len(rows) <= i:
            rows.append(phi_bits(rows[-1], m))
        return rows[i]

    def cell(i, j):
        return row(i)[j] if 0 <= j < N else 0

    start = None
    for i in range(2 * m + 4):
        if row(i)[0]:
            start = i
            break
    if start is None:
        return None
    r, j, out = start, 0, []
    while j != N - 1:
        if cell(r, j + m + 1):
            j += m + 1
            out.append(0)
        else:
            r, j = r + 1, j + 1
            out.append(1)
    return tuple(out)


def phi_orbit_size_fast(S: ToggleWord) -> int:
    """phi-orbit size from one snake: the sum of min(k, m) + 2 over the
    rho-orbit of its word, k being each word's leading run of ones.

    Falls back to direct iteration on one-column boards.
    """
    if S.space != "X":
        raise ValueError("fast sizing needs a word of X_N")
    m = S.m
    w = _first_snake_word(S.bits.bits, m) if len(S) >= 2 else None
    if w is None:
        return len(phi_orbit_bits(S.bits.bits, m))
    return sum(min(leading_ones(u), m) + 2 for u in rho_orbit_bits(w, m))


@dataclass(frozen=True)
class PhiOrbitRow:
    representative: BinaryWord
    tilde_base: str
    rw: str
    bqw: str
    period: int


def decompose_X(N: int, m: int, cap: int = MAX_TOGGLE_N) -> list[PhiOrbitRow]:
    """phi-orbits of X_N keyed by their least member, with the first snake
    word of that member's board, its encoding and the orbit size."""
    _check_N(N, m, cap)
    seen: set[Bits] = set()
    out = []
    for S in enumerate_X(N, m, cap):
        bits = S.bits.bits
        if bits in seen:
            continue
        orb = phi_orbit_bits(bits, m)
        seen.update(orb)
        if N >= 2:
            w = base_word(S)
            pair = encode_bits(w, m)
            tilde, rw, bqw = "".join(map(str, w)), pair.rw_str(), pair.bqw_str()
        else:
            tilde = rw = bqw = ""
        out.append(PhiOrbitRow(S.bits, tilde, rw, bqw, len(orb)))
    return out


def decompose_Z(N: int, m: int, cap: int = MAX_TOGGLE_N) -> list[tuple[BinaryWord, int]]:
    seen: set[Bits] = set()
    out = []
    for z in enumerate_Z(N, m, cap):
        bits = z.bits.bits
        if bits in seen:
            continue
        orb = phi_orbit_bits(bits, m, "Z")
        seen.update(orb)
        out.append((z.bits, len(orb)))
    return out


def check_orbit_bijection(N: int, m: int) -> CheckReport:
    """phi-orbits of X_N and rho-orbits of Y_{N-1} match one to one via the
    snake word of each board."""
    report = CheckReport("bijection", {"N": N, "m": m})
    y_orbit = {}
    for y in enumerate_Y(N - 1, m):
        if y in y_orbit:
            continue
        orb = rho_orbit_bits(y, m)
        key = min(orb)
        for u in orb:
            y_orbit[u] = key
    rows = decompose_X(N, m)
    hit = [y_orbit[tilde_bits_from_str(r.tilde_base)] for r in rows]
    report.add("distinct", len(set(hit)) == len(hit), hit=["".join(map(str, h)) for h in hit])
    report.add("onto", set(hit) == set(y_orbit.values()),
               phi_orbits=len(rows), rho_orbits=len(set(y_orbit.values())))
    return report


def tilde_bits_from_str(s: str) -> Bits:
    return tuple(int(ch) for ch in s)
