import pytest
from hypothesis import given, strategies as st

from genrot.bitword import parse_word
from genrot.grot import extension_trace, index_decomposition, orbit, rho_bits, rotate, rotate_inv

import oracles

EXAMPLE_ORBIT = [
    "1011110", "1111001", "1001111", "0111101", "1111010",
    "1010111", "1011101", "1110101", "0101111",
]


@st.composite
def word_and_m(draw, max_size=14):
    s = draw(st.text(alphabet="01", min_size=1, max_size=max_size))
    m = draw(st.integers(1, len(s)))
    return s, m


def test_example_orbit_m3():
    orb = orbit(parse_word("1011110"), 3)
    assert [str(u) for u in orb] == EXAMPLE_ORBIT
    assert orb.p == 9
    assert parse_word("0101111") in orb


def test_remark_orbit_skips_reverse():
    w = parse_word("00100101")
    orb = orbit(w, 2)
    assert [str(u) for u in orb] == [
        "00100101", "01001010", "10010100", "01010001", "10100010", "10001001",
    ]
    assert parse_word("10100100") not in orb


@pytest.mark.parametrize(
    "before, after",
    [("0110", "1100"), ("1011", "1101"), ("1101", "1011"), ("1110", "0111")],
)
def test_rho_cases_m3(before, after):
    # one instance of each prefix case: 0, 10, 110, 111
    assert str(rotate(parse_word(before), 3)) == after


@given(word_and_m())
def test_rotate_matches_definition(case):
    s, m = case
    assert str(rotate(parse_word(s), m)) == oracles.rho(s, m)


@given(st.text(alphabet="01", min_size=1, max_size=14))
def test_m1_is_left_rotation(s):
    assert str(rotate(parse_word(s), 1)) == s[1:] + s[0]


@given(word_and_m())
def test_rotate_inv_inverts(case):
    s, m = case
    w = parse_word(s)
    assert rotate_inv(rotate(w, m), m) == w
    assert rotate(rotate_inv(w, m), m) == w


@given(word_and_m(max_size=10))
def test_orbit_matches_brute_force(case):
    s, m = case
    assert [str(u) for u in orbit(parse_word(s), m)] == oracles.rho_orbit(s, m)


def test_short_all_ones_word_is_fixed():
    assert rho_bits((1, 1), 3) == (1, 1)
    assert rho_bits((1, 0), 3) == (0, 1)


@pytest.mark.parametrize("m", [0, 8])
def test_m_out_of_range(m):
    with pytest.raises(ValueError):
        rotate(parse_word("1011110"), m)


def test_extension_trace_example():
    t = extension_trace(parse_word("1011110"), 3)
    assert t.c == (0, 2, 5, 7, 8, 11, 13, 15, 18, 19)
    assert t.l == 19
    assert str(t.bar) == "1011110011110101110"
    assert str(t.hat) == "0111101011101011110"
    for k, u in enumerate(EXAMPLE_ORBIT):
        assert str(t.window(k)) == u


def test_index_sets_example():
    d = index_decomposition(extension_trace(parse_word("1011110"), 3))
    assert d.i0 == {1, 6, 7, 12, 14, 18}
    assert d.ih == {0, 2, 3, 5, 8, 9, 11, 13, 15, 16}
    assert d.it == {4, 10, 17}
    assert d.hat_i0 == {0, 5, 7, 11, 13, 18}
    assert d.hat_ih == {1, 3, 4, 6, 9, 10, 12, 14, 16, 17}
    assert d.hat_it == {2, 8, 15}
    assert d.part("T") == d.it and d.part("H", hatted=True) == d.hat_ih


@given(word_and_m(max_size=10))
def test_trace_invariants(case):
    s, m = case
    t = extension_trace(parse_word(s), m)
    orb = oracles.rho_orbit(s, m)
    assert t.p == len(orb)
    assert list(t.c) == sorted(set(t.c))
    assert t.c[0] == 0 and t.c[-1] == t.l == len(t.bar) == len(t.hat)
    for k, u in enumerate(orb):
        assert str(t.window(k)) == u
    d = index_decomposition(t)
    # the three parts partition the index set, both plain and hatted
    assert d.i0 | d.it | d.ih == set(range(t.l))
    assert len(d.i0) + len(d.it) + len(d.ih) == t.l
    assert d.hat_i0 | d.hat_it | d.hat_ih == set(range(t.l))
    # zeros and tails mark exactly the orbit starts
    assert {(k + 1) % t.l for k in d.i0 | d.it} == {c % t.l for c in t.c}
    assert d.hat_i0 | d.hat_it == {c % t.l for c in t.c}
