"""Bethe states of the periodic XX chain and what their determinants compute.

Run with ``python demos/xx_chain.py``.
"""
import numpy as np

from xxcomb.bethe import (ChainSpec, all_quantum_numbers, amplitude_determinant, amplitude_spectral,
                          bethe_roots, dense_trace, eigen_residual)
from xxcomb.genfun import FermiKernel, finite_difference_minor, minor_derivative, total_trace
from xxcomb.walks import WalkConfig, count_with_stays

# %% Every choice of quantum numbers gives an eigenvector built from Schur polynomials.
spec = ChainSpec(M=8, N=3, h=0.2)
worst = max(eigen_residual(bethe_roots(spec, I)) for I in all_quantum_numbers(8, 3))
print(f"M=8, N=3: {len(all_quantum_numbers(8, 3))} states, largest residual {worst:.1e}")

# %% Transition amplitudes: spectral sum versus a single N x N determinant.
spec = ChainSpec(M=6, N=2, h=0.3)
for beta in (0.3, 1.0, 2.5):
    a = amplitude_spectral(spec, (3, 1), (5, 2), beta)
    b = amplitude_determinant(spec, (3, 1), (5, 2), beta)
    print(f"beta={beta}: spectral {a:.15f}  determinant {b:.15f}")

# %% Their Taylor coefficients count walker nests, with field-weighted pauses.
poly = count_with_stays(WalkConfig(2, 4, 6), (3, 1), (3, 1))
print("closed 4-tick nests by number of pauses:", poly)

# %% Full partition function with a position-dependent weight, against exact diagonalisation.
a = np.linspace(-0.2, 0.3, 4)
for beta in (0.5, 2.0):
    t = total_trace(ChainSpec(4, 0, 0.4), a, beta)
    print(f"beta={beta}: determinant {t.value:.12f} (ell=-1 part {t.minus:+.2e}), dense {dense_trace(4, 0.4, beta, a):.12f}")

# %% Correlation minors of the Fermi-weight matrix, checked by finite differences.
k = FermiKernel(beta=1.0, h=0.3, M=4)
print("minor at sites (3,1):", minor_derivative(k, (3, 1)), "finite difference:", finite_difference_minor(k, (3, 1)))
print("infinite chain at beta=0, sites (3,2,1):", minor_derivative(FermiKernel(0.0), (3, 2, 1)))
