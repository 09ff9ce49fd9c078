"""
The self-energy series S(alpha)
===============================

A charge near a global monopole feels an attractive 1/r force set by
S(alpha). The series converges like 1/l^2, so the tail after L terms is
summed in closed form rather than by brute force.
"""

import time

import numpy as np

from monopole_spectra import monopole_series_S

# flat space: every term vanishes
print("S(1) =", monopole_series_S(1.0).value)

# error bound and terms used as the deficit grows
for alpha in (0.9, 0.5, 0.2, 0.05):
    s = monopole_series_S(alpha)
    print(f"alpha={alpha:<5} S={s.value:.15f}  bound={s.error_bound:.1e}  terms={s.terms_used}")

# a tighter tolerance costs little
t = time.perf_counter()
s = monopole_series_S(0.3, tolerance=1e-13)
print(f"S(0.3) to 1e-13 in {1e3 * (time.perf_counter() - t):.2f} ms using {s.terms_used} terms")

# naive partial sums creep up on the limit only like 1/N
alpha = 0.5
exact = monopole_series_S(alpha).value
for N in (10, 1000, 100_000):
    l = np.arange(N)
    partial = np.sum((2 * l + 1) / np.sqrt(4 * l * (l + 1) + alpha**2) - 1)
    print(f"N={N:>6}  partial sum misses by {exact - partial:.3e}")

# the coupling K = e^2 S / 2 weakens smoothly towards flat space
alphas = np.linspace(0.2, 1.0, 9)
print(np.column_stack([alphas, [monopole_series_S(a).value / 2 for a in alphas]]))
