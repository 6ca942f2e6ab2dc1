"""
Raising an oriented triangle into a tournament
==============================================

The five-row example, one raising operator at a time.
"""

# %%
from asmtour import Triangle, phi, psi, triangle_weight, tournament_weight

o = Triangle.from_tokens([
    ["y:4"],
    ["y:3", "x:4"],
    ["y:2", "x:3", "y:5"],
    ["x:1", "y:3", "y:4", "y:5"],
    ["n:1", "n:2", "n:3", "n:4", "n:5"],
])
print(o)

# %%
# check=True re-verifies admissibility and weight after every step.
tour, trace = phi(o, check=True)
print(trace.to_text())

# %%
print("edges:", tour.edges())
print("weight:", tournament_weight(tour), "=", triangle_weight(o))

# %%
# Lowering retraces the same triangles in reverse.
back, _ = psi(tour)
assert back == o
