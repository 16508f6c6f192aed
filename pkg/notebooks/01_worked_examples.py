"""
Six small representations
=========================

Builds the six worked example representations, prints their coefficient
quivers and classifications, and writes them to ``fixtures/`` as JSON so the
command-line tool has something to read.

Run with ``python3 notebooks/01_worked_examples.py``.
"""

# %%
from pathlib import Path

from stringgrass import build_coefficient_quiver, chi_table, classify_string, table1_fixture
from stringgrass.quiver import dumps

out_dir = Path(__file__).resolve().parent.parent / "fixtures"
out_dir.mkdir(exist_ok=True)

# %% [markdown]
# Each row is a representation given in a fixed basis.  Row 1 also has a
# presentation that is not monomial: its single matrix is [1, 1]^T.

# %%
for row in range(1, 7):
    rep = table1_fixture(row)
    cq = build_coefficient_quiver(rep)
    cls = classify_string(rep)
    print(f"row {row}: dims={rep.dims}")
    for a in cq.arrows:
        print(f"   {a.tail} --{a.label}--> {a.head}")
    print(f"   string={cls.is_string} orientable={cls.is_string and cls.is_orientable}")
    print(f"   chi: {chi_table(rep).polynomial()}")
    (out_dir / f"row{row}.json").write_text(dumps(rep) + "\n")

dense = table1_fixture(1, monomial=False)
(out_dir / "row1_dense.json").write_text(dumps(dense) + "\n")
print(f"wrote {len(list(out_dir.glob('*.json')))} files to {out_dir}")

# %% [markdown]
# Row 3 at e = (1, 0, 0): the two sinks of the coefficient quiver are the
# only closed one-point subsets over vertex 1.

# %%
print("row 3, e=(1,0,0):", chi_table(table1_fixture(3))[(1, 0, 0)])
