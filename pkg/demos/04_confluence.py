"""
Any order of raises gives the same tournament
=============================================
"""

# %%
import collections
import random

from asmtour import enumerate_ocmt, phi, phi_any_order
from asmtour.enumeration import standard

rng = random.Random(1)
orders = collections.Counter()
for o in enumerate_ocmt(standard(4)):
    want = phi(o)[0]
    for _ in range(20):
        tour, trace = phi_any_order(o, rng.getrandbits(64))
        assert tour == want
        orders[tuple(s.d for s in trace.steps)] += 1

# %%
# Distinct raise orders actually exercised; at order 4 only R_1 and R_3
# can ever be applicable together, so there are just two.
for seq, count in orders.most_common(8):
    print(seq, count)
print(len(orders), "distinct orders")
