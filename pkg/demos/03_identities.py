"""
Checking the refined identity exactly
=====================================

Both sides as exact sparse polynomials, then the lambda specialization.
"""

# %%
import time

from asmtour import brid_check, lhs_refid, rhs_refid, rhs_via_oriented
from asmtour.identities import tournament_sum

for n in range(1, 6):
    t0 = time.perf_counter()
    lhs = lhs_refid(n)
    same = lhs == rhs_refid(n) == rhs_via_oriented(n) == tournament_sum(n)
    print(f"n={n}: {len(lhs):4d} terms, all four agree: {same}  ({time.perf_counter() - t0:.2f} s)")

# %%
print(lhs_refid(3))

# %%
# Putting y_i = lambda x_i.
for n in range(1, 6):
    print(n, brid_check(n).summary())
print(brid_check(3).lhs)
