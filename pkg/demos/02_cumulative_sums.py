"""Left and right cumulative sums over an orbit, and the blocks that
explain why they agree.

Run with: python3 demos/02_cumulative_sums.py
"""

# %%
import numpy as np

from genrot import (
    extension_trace,
    frequency_table,
    index_decomposition,
    left_from_blocks,
    m_table,
    parse_word,
)

w = parse_word("1011110")
m = 3

left = frequency_table(w, m)
right = frequency_table(w, m, right=True)
print(left)
print("left == right:", np.array_equal(left, right))

# %%
# the orbit unrolled into one periodic word, and its index classes
t = extension_trace(w, m)
print("bar", t.bar, "hat", t.hat, "c", t.c)
d = index_decomposition(t)
print("I0", sorted(d.i0), "IT", sorted(d.it), "IH", sorted(d.ih))

# %%
for (a, b), block in m_table(t, d, 3).items():
    print(f"M_{a}{b}", block.elements())
print("L(2) from blocks:", left_from_blocks(t, d, 2).elements())
