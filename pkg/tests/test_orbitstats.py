import pytest
from hypothesis import given, settings, strategies as st

from genrot.bitword import BinaryWord, parse_word
from genrot.grot import extension_trace, index_decomposition
from genrot.orbitstats import (
    LABELS,
    IntMultiset,
    check_alternative_expressions,
    check_corollary_column_sums,
    check_lemma_identities,
    check_reflection,
    check_theorem1,
    cumulative_sums,
    frequency_table,
    left_from_blocks,
    left_multiset,
    m_ab,
    m_table,
    right_multiset,
    union,
)
from genrot.grot import rho_orbit_bits

import oracles

W = parse_word("1011110")

LEFT_SUMS = [
    [0, 1, 1, 2, 3, 4, 5, 5],
    [0, 1, 2, 3, 4, 4, 4, 5],
    [0, 1, 1, 1, 2, 3, 4, 5],
    [0, 0, 1, 2, 3, 4, 4, 5],
    [0, 1, 2, 3, 4, 4, 5, 5],
    [0, 1, 1, 2, 2, 3, 4, 5],
    [0, 1, 1, 2, 3, 4, 4, 5],
    [0, 1, 2, 3, 3, 4, 4, 5],
    [0, 0, 1, 1, 2, 3, 4, 5],
]
RIGHT_SUMS = [
    [0, 0, 1, 2, 3, 4, 4, 5],
    [0, 1, 2, 3, 4, 4, 5, 5],
    [0, 1, 1, 2, 2, 3, 4, 5],
    [0, 1, 1, 2, 3, 4, 4, 5],
    [0, 1, 2, 3, 3, 4, 4, 5],
    [0, 0, 1, 1, 2, 3, 4, 5],
    [0, 1, 1, 2, 3, 4, 5, 5],
    [0, 1, 2, 3, 4, 4, 4, 5],
    [0, 1, 1, 1, 2, 3, 4, 5],
]
FREQ_GRID = [
    [9, 2, 0, 0, 0, 0, 0, 0],
    [0, 7, 6, 2, 0, 0, 0, 0],
    [0, 0, 3, 4, 3, 0, 0, 0],
    [0, 0, 0, 3, 4, 3, 0, 0],
    [0, 0, 0, 0, 2, 6, 7, 0],
    [0, 0, 0, 0, 0, 0, 2, 9],
]
BLOCKS_J3 = {
    ("0", "0"): [1, 1], ("0", "T"): [], ("0", "H"): [1, 2, 2, 2],
    ("T", "0"): [2, 2], ("T", "T"): [], ("T", "H"): [2],
    ("H", "0"): [1, 2], ("H", "T"): [3, 3, 3], ("H", "H"): [2, 2, 2, 3, 3],
}


@st.composite
def word_and_m(draw, max_size=10):
    s = draw(st.text(alphabet="01", min_size=1, max_size=max_size))
    m = draw(st.integers(1, min(len(s), 4)))
    return s, m


class TestIntMultiset:
    def test_counts_and_order(self):
        ms = IntMultiset([2, 1, 2])
        assert ms.counts == {1: 1, 2: 2}
        assert ms.elements() == [1, 2, 2]
        assert len(ms) == 3 and ms.count(5) == 0

    def test_union_is_additive(self):
        assert IntMultiset([1, 1]) + IntMultiset([1]) == IntMultiset([1, 1, 1])
        assert union() == IntMultiset()

    def test_shift(self):
        assert IntMultiset([2, 3]).shift(-1) == IntMultiset([1, 2])
        with pytest.raises(ValueError):
            IntMultiset([0]).shift(-1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            IntMultiset([-1])

    def test_hash_respects_equality(self):
        assert hash(IntMultiset([3, 1])) == hash(IntMultiset.from_counts({1: 1, 3: 1}))


def test_cumulative_sum_tables():
    orb = rho_orbit_bits(W.bits, 3)
    assert cumulative_sums(orb).tolist() == LEFT_SUMS
    right = cumulative_sums(orb, right=True).tolist()
    # the reference right table walks the orbit backwards: row k is rho^-k(w)
    assert [right[-k % 9] for k in range(9)] == RIGHT_SUMS


def test_frequency_grid():
    assert frequency_table(W, 3).tolist() == FREQ_GRID
    assert frequency_table(W, 3, right=True).tolist() == FREQ_GRID


def test_frequency_of_zero_word():
    t = frequency_table(BinaryWord.zeros(5), 2)
    assert t.shape == (1, 6)
    assert (t == 1).all()


def test_left_multiset_rejects_bad_j():
    with pytest.raises(ValueError):
        left_multiset(W, 3, 8)


def test_block_table_example():
    t = extension_trace(W, 3)
    d = index_decomposition(t)
    table = m_table(t, d, 3)
    for key, values in BLOCKS_J3.items():
        assert table[key] == IntMultiset(values), key
    hatted = m_table(t, d, 3, hatted=True)
    assert hatted == table
    assert left_from_blocks(t, d, 2) == IntMultiset([1] * 6 + [2] * 3)


def test_m_ab_rejects_j_out_of_range():
    t = extension_trace(W, 3)
    d = index_decomposition(t)
    with pytest.raises(ValueError):
        m_ab(t, d, 0, "0", "0")
    with pytest.raises(ValueError):
        m_ab(t, d, 8, "0", "0")


@given(word_and_m())
def test_left_right_match_oracle(case):
    s, m = case
    w = parse_word(s)
    for j in range(len(s) + 1):
        left = left_multiset(w, m, j)
        right = right_multiset(w, m, j)
        assert left.counts == dict(oracles.left_sums(s, m, j))
        assert right.counts == dict(oracles.right_sums(s, m, j))
        assert left == right


@given(word_and_m())
def test_blocks_reassemble_left_and_right(case):
    s, m = case
    w = parse_word(s)
    t = extension_trace(w, m)
    d = index_decomposition(t)
    for j in range(len(s)):
        assert left_from_blocks(t, d, j).counts == dict(oracles.left_sums(s, m, j))
        assert left_from_blocks(t, d, j, hatted=True).counts == dict(oracles.right_sums(s, m, j))


@settings(max_examples=60)
@given(word_and_m(max_size=9))
def test_blocks_agree_with_hatted(case):
    s, m = case
    t = extension_trace(parse_word(s), m)
    d = index_decomposition(t)
    for j in range(1, len(s) + 1):
        for a in LABELS:
            for b in LABELS:
                assert m_ab(t, d, j, a, b) == m_ab(t, d, j, a, b, hatted=True)


@given(word_and_m())
def test_column_sums_mirror(case):
    s, m = case
    orb = oracles.rho_orbit(s, m)
    sums = oracles.column_sums(orb)
    assert sums == sums[::-1]
    assert check_corollary_column_sums(parse_word(s), m).passed


@pytest.mark.parametrize("n", range(1, 8))
def test_all_checks_exhaustive_small(n):
    for m in range(1, min(n, 3) + 1):
        for s in oracles.words(n):
            w = parse_word(s)
            for check in (check_theorem1, check_reflection, check_lemma_identities,
                          check_alternative_expressions):
                rep = check(w, m)
                assert rep.passed, rep.to_dict()


def test_report_keeps_witness_only_on_failure():
    rep = check_theorem1(W, 3)
    assert rep.passed and bool(rep)
    assert all("witness" not in v for v in rep.to_dict()["verdicts"])
