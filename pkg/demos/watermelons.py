"""Plane partitions in a box as pairs of tableaux glued along a diagonal.

Run with ``python demos/watermelons.py``.
"""
from fractions import Fraction

from xxcomb.genfun import macmahon, norm_trace_det, norm_trace_sum, pinned_pp_count, unbounded_products
from xxcomb.partitions import enumerate_ssyt, pp_to_watermelon, watermelon_to_pp
from xxcomb.symfun import schur_ones

# %% Glue two semistandard fillings of the same shape into a plane partition.
lam = (5, 4, 2, 0, 0, 0)
tabs = list(enumerate_ssyt(lam, 6))
print(f"shape {lam} has {len(tabs)} fillings with entries <= 6 (schur_ones = {schur_ones(lam)})")
pp = watermelon_to_pp(lam, tabs[0], tabs[7], 6)
for row in pp.heights:
    print("   ", " ".join(f"{v}" for v in row))
print("main diagonal trace:", sum(pp.diagonal()), " bottom 3x3 corner empty:",
      all(pp.heights[i][j] == 0 for i in range(3, 6) for j in range(3, 6)))
assert pp_to_watermelon(pp) == (lam, tabs[0], tabs[7])

# %% Summing squares of tableau counts reproduces MacMahon's box formula.
for N, box in [(2, 2), (3, 2), (3, 3)]:
    print(f"box {N}x{N}x{box}: MacMahon {macmahon(N, box)}, sum of squared tableau counts {pinned_pp_count(N, box)}")

# %% Volume and diagonal trace together: determinant versus enumeration.
q, g = Fraction(1, 2), Fraction(2, 3)
poly = norm_trace_sum(3, 2)
print(f"N=3, box 2 at q={q}, gamma={g}: determinant {norm_trace_det(3, 2, q, g)}, enumeration {poly(q, g)}")

# %% Letting the box grow approaches an infinite product.
for box in (5, 10, 20, 30):
    print(f"box {box:>2}: {norm_trace_det(2, box, 0.3, 0.8):.15f}")
print(f"limit  : {unbounded_products(2, 0.3, 0.8).double:.15f}")
