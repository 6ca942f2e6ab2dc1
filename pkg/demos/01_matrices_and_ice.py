"""
From an alternating sign matrix to square ice
=============================================

A 5x5 ASM, its column partial sums, its monotone triangle, and the
six-vertex picture with per-column vertex counts.
"""

# %%
import numpy as np

from asmtour import asm_to_cmt, build_ice_grid, column_sums, validate_asm, vertex_stats

a = validate_asm([
    [0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0],
    [0, 1, 0, -1, 1],
    [1, -1, 0, 1, 0],
    [0, 1, 0, 0, 0],
])
print(a.array)

# %%
# Row k of the partial-sum matrix has exactly k ones; their positions
# form row k of the monotone triangle.
print(column_sums(a))
for row in asm_to_cmt(a).rows:
    print(row)

# %%
# The two -1 entries become the two V vertices.
grid = build_ice_grid(a)
for row in grid.types:
    print(" ".join(f"{t:>2}" for t in row))
print("V cells:", np.argwhere(a.array == -1).tolist())

# %%
st = vertex_stats(a)
print("SE per column", st.se)
print("SW per column", st.sw)
print("V  per column", st.v)
