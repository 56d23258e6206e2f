"""Brute-force reference implementations used as test oracles.

Everything here works on plain '0'/'1' strings straight from the
definitions and deliberately shares no code with the package.
"""

from collections import Counter
from itertools import product


def words(n):
    return ["".join(t) for t in product("01", repeat=n)]


def rho(s, m):
    for k in range(m):
        if s[: k + 1] == "1" * k + "0":
            return s[k + 1:] + "0" + "1" * k
    return s[m:] + "1" * m


def rho_orbit(s, m):
    out = [s]
    t = rho(s, m)
    while t != s:
        out.append(t)
        t = rho(t, m)
    return out


def left_sums(s, m, j):
    return Counter(sum(int(c) for c in u[:j]) for u in rho_orbit(s, m))


def right_sums(s, m, j):
    return Counter(sum(int(c) for c in u[::-1][:j]) for u in rho_orbit(s, m))


def ore(s):
    return tuple(len(run) for run in s.split("0"))


def rotation_count(seq):
    seq = tuple(seq)
    return len({seq[i:] + seq[:i] for i in range(len(seq))})


def in_X(s, m):
    n = len(s)
    return all(s[i:i + m + 1].count("1") <= 1 for i in range(n - m))


def in_X_distance(s, m):
    ones = [i for i, c in enumerate(s) if c == "1"]
    return all(b - a > m for a, b in zip(ones, ones[1:]))


def in_Z(s, m):
    return "1" * (m + 1) not in s


def toggle(s, i, m, member):
    t = s[:i] + ("1" if s[i] == "0" else "0") + s[i + 1:]
    return t if member(t, m) else s


def phi(s, m, member=in_X_distance):
    for i in range(len(s)):
        s = toggle(s, i, m, member)
    return s


def phi_orbit(s, m, member=in_X_distance):
    out = [s]
    t = phi(s, m, member)
    while t != s:
        out.append(t)
        t = phi(t, m, member)
    return out


def phi_orbits(N, m, member=in_X_distance):
    seen, orbits = set(), []
    for s in words(N):
        if s in seen or not member(s, m):
            continue
        orb = phi_orbit(s, m, member)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def column_sums(orb):
    return [sum(int(u[i]) for u in orb) for i in range(len(orb[0]))]


def Y(n, m):
    """Words with ones + (m+1)*zeros == n."""
    out = []
    for length in range(n + 1):
        for s in words(length):
            if s.count("1") + (m + 1) * s.count("0") == n:
                out.append(s)
    return out
