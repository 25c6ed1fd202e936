"""Counting walker paths on a six-site ring, three ways.

Run with ``python demos/ring_walkers.py``.
"""
import numpy as np

from xxcomb.circulant import circulant_power_formula, delta_matrix, ramus_sides
from xxcomb.walks import WalkConfig, count_formula, oracle_count

# %% A single walker: entries of the hopping matrix raised to the K-th power.
M = 6
for K in (14, 15):
    row = circulant_power_formula(M, K).entries
    print(f"K={K}: row of Delta^K by offset = {row}")

# numpy agrees as long as the numbers fit in int64
D = np.array(delta_matrix(M), dtype=np.int64)
print("numpy matrix_power, K=14:", np.linalg.matrix_power(D, 14)[0].tolist())

# %% The same number is a lacunary binomial sum with a cosine closed form.
trig, exact = ramus_sides(3, 14, 1)
print(f"sum_k C(14, 1+3k) = {exact}, cosine side = {trig:.9f}")

# %% Several walkers: a determinant over compositions of K versus brute force.
cfg = WalkConfig(N=2, K=6, M=M)
for muL, muR in [((2, 1), (2, 1)), ((3, 1), (5, 2)), ((4, 1), (6, 3))]:
    f = count_formula(cfg, muL, muR)
    o = oracle_count(cfg, muL, muR).value
    print(f"{muL} -> {muR} in 6 moves: formula {f}, enumeration {o}")

# %% With an even number of walkers a wrap past the seam costs a sign.
cfg = WalkConfig(N=2, K=4, M=4)
print("two walkers on a 4-ring, closed 4-move nests:", count_formula(cfg, (2, 1), (2, 1)),
      "(enumeration:", oracle_count(cfg, (2, 1), (2, 1)).value, ")")
