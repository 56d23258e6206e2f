"""Toggle dynamics on X_N: boards, snakes and symmetric column sums.

Run with: python3 demos/04_toggles_and_snakes.py
"""

# %%
from genrot import (
    ToggleWord,
    column_sums_via_frequency,
    decompose_X,
    find_snakes,
    orbit_board,
    parse_word,
    phi_orbit_size_fast,
    snake_tilde,
)

S = ToggleWord(parse_word("10000000001000"), 3)
board = orbit_board(S)
print(board.q, "rows")
for row in board.row_words()[:6]:
    print(row)

# %%
# every 1 on the board sits on exactly one snake; read as words they are a rho-orbit
for s in find_snakes(board):
    print(s.start_row, "".join(map(str, s.composition)), snake_tilde(s.composition, 3))

# %%
sums = board.column_sums().tolist()
print(sums, "symmetric:", sums == sums[::-1])
print(column_sums_via_frequency(S) == sums)
print("orbit size from one snake:", phi_orbit_size_fast(S))

# %%
for r in decompose_X(14, 3):
    print(r.representative, r.tilde_base, r.period)
