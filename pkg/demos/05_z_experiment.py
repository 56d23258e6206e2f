"""The no-m+1-consecutive-ones space Z_N, where column-sum symmetry was
only expected empirically.  It fails, starting at N = 8 for m = 3.

Run with: python3 demos/05_z_experiment.py
"""

# %%
from genrot import ToggleWord, check_Z_symmetry, orbit_board, parse_word, run_sweep

for N in range(6, 13):
    res = run_sweep("z-conjecture", [N], [2, 3])
    print(N, res.checked, "orbits,", len(res.failures), "asymmetric")

# %%
z = ToggleWord(parse_word("00000010"), 3, "Z")
board = orbit_board(z)
print(board.q, board.column_sums().tolist())
print([v.label for v in check_Z_symmetry(z, 3).failures()])
