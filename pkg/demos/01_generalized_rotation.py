"""Walking a rho-orbit by hand.

Run with: python3 demos/01_generalized_rotation.py
"""

# %%
from genrot import orbit, parse_word, reverse, rotate, rotate_inv

w = parse_word("1011110")
m = 3

# rho moves a short leading run of ones (plus its 0) to the back,
# or exactly m ones when the run is long enough
print(w, "->", rotate(w, m))
print(rotate_inv(rotate(w, m), m) == w)

# %%
orb = orbit(w, m)
for k, u in enumerate(orb):
    print(k, u)
print("orbit size", orb.p)

# %%
# with m = 1 this is the ordinary left rotation
print(rotate(parse_word("1101000"), 1))

# %%
# unlike plain rotation, an orbit need not contain the reversed word
u = parse_word("00100101")
print([str(x) for x in orbit(u, 2)])
print(reverse(u), "in orbit:", reverse(u) in orbit(u, 2))
