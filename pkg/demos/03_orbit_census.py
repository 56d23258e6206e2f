"""Orbit sizes without iterating rho, and a census of {0,1}^n.

Run with: python3 demos/03_orbit_census.py
"""

# %%
from collections import Counter

from genrot import decompose_space, encode, max_orbit_size, orbit, orbit_size, parse_word, theta

w = parse_word("1011110")
pair = encode(w, 3)
print("rw", pair.rw_str(), "bqw", pair.bqw_str())

# theta on the pair shadows rho on the word
for u in orbit(w, 3):
    print(u, encode(u, 3).rw_str(), encode(u, 3).bqw_str(), pair.rw_str(), pair.bqw_str())
    pair = theta(pair)

# %%
print(orbit_size(parse_word("1110000000"), 2), "==", max_orbit_size(10, 2))

# %%
census = decompose_space(7, 3, fast=True)
print(len(census), "orbits")
print(sorted(Counter(size for _, size in census).items()))
print("largest", max(census, key=lambda e: e[1]))
