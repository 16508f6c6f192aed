"""
Closed formulas for the A~(p,1) families
========================================

Compares the preprojective, preinjective and regular closed formulas with
direct enumeration, and shows the one point per family where the bare
binomial products need a correction.
"""

# %%
from stringgrass import PREINJECTIVE, PREPROJECTIVE, REGULAR, Ap1Family, build_ap1_module, chi_table
from stringgrass.ap1 import chi_family, preinjective_product, preprojective_product
from stringgrass.verify import run_sweep

# %% [markdown]
# A single family first: every dimension vector in the box.

# %%
fam = Ap1Family(2, 2, PREPROJECTIVE, 1)
table = chi_table(build_ap1_module(fam))
bad = [e for e in table.box() if table[e] != chi_family(fam, e)]
print(f"{fam}: dims={fam.dims()} rows={len(list(table.box()))} mismatches={len(bad)}")

# %% [markdown]
# Without the correction term, the products miss exactly one point: the zero
# subrepresentation for preprojectives, the whole module for preinjectives.

# %%
for kind, product in ((PREPROJECTIVE, preprojective_product), (PREINJECTIVE, preinjective_product)):
    for n in range(0, 3):
        fam = Ap1Family(3, n, kind, 2)
        table = chi_table(build_ap1_module(fam))
        diff = [e for e in table.box() if table[e] != product(3, n, 2, e)]
        print(f"{kind:13s} n={n}: product differs at {diff}")

# %% [markdown]
# The whole sweep, as the ``verify`` command runs it.

# %%
report = run_sweep(4, 3, workers=1)
print(f"checks={report.checks} mismatches={len(report.mismatches)}")

# %%
reg = Ap1Family(2, 3, REGULAR)
print("regular p=2 n=3:", chi_table(build_ap1_module(reg)).polynomial())
