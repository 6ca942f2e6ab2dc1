"""
Arbitrary bottom rows
=====================

Strict triangles over S = (1, 2, 4, 5), the product formula, and phi_s
carrying oriented triangles onto admissible pure-V triangles.
"""

# %%
from asmtour import count_strict_formula, count_t_s, enumerate_ocmt, enumerate_strict, enumerate_t_s, phi_s, psi_s

s = (1, 2, 4, 5)
for c in enumerate_strict(s):
    print(c.rows)
print("formula:", count_strict_formula(s))

# %%
image = {phi_s(o) for o in enumerate_ocmt(s)}
print(len(image), count_t_s(s), image == set(enumerate_t_s(s)))

# %%
t = sorted(image, key=lambda t: t.tokens())[0]
print(t)
print(psi_s(t))
