"""
Degree assignments
==================

A count of coordinate subrepresentations is an Euler characteristic once the
basis carries integer degrees that are distinct over each vertex and shift by
a constant along every arrow label.  This script finds such degrees, shows
where chain numbering suffices, and shows a representation with none.
"""

# %%
from fractions import Fraction

from stringgrass import (
    Arrow,
    Quiver,
    Representation,
    build_coefficient_quiver,
    classify_string,
    solve_degrees,
    string_degrees,
    table1_fixture,
    verify_degrees,
)

# %% [markdown]
# Row 5 is an orientable string: numbering its chain 1, 2, 3, 4 works.
# Row 6 is a string too, but label ``a`` points both ways along its chain, so
# chain numbering fails; the linear solver still finds degrees.

# %%
for row in (5, 6):
    rep = table1_fixture(row)
    cls = classify_string(rep)
    cq = build_coefficient_quiver(rep)
    if cls.is_orientable:
        deg = string_degrees(cls)
        how = "chain position"
    else:
        deg = solve_degrees(cq)
        how = "linear solve"
    print(f"row {row} ({how}): {deg.to_dict()}  valid={verify_degrees(cq, deg)}")

# %% [markdown]
# Two arrows 1 -> 2 acting as the identity and as the swap force equal
# degrees on both basis vectors at each vertex.

# %%
one = Fraction(1)
q = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 1, 2)))
swap = Representation(q, (2, 2), {"a": ((1, 1, one), (2, 2, one)), "b": ((2, 1, one), (1, 2, one))})
res = solve_degrees(build_coefficient_quiver(swap))
print("identity + swap:", "feasible" if res else f"infeasible, witness {res.witness}")
print("all forced pairs:", res.forced_pairs)
