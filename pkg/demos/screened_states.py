"""
Screened Kratzer states
=======================

Damping the Kratzer terms by exp(-delta r) leaves only finitely many bound
levels. The closed forms come from replacing 1/r and 1/r^2 with
exponential ratios, which is accurate while delta r stays small.
"""

import numpy as np

from monopole_spectra import (
    Kind,
    ModelParams,
    energy_kratzer,
    energy_screened,
    max_radial_quantum_number,
    potential_minimum,
    wavefunction_extent,
    wavefunction_kratzer,
    wavefunction_screened,
)

params = ModelParams.from_values(alpha=0.5, A=2.0, D=4.0)

# the well gets shallower and moves inward as screening grows
for delta in (0.0, 0.1, 0.2):
    r_star, v_star = potential_minimum(params.replace(delta=delta), l=2, kind=Kind.SCREENED)
    print(f"delta={delta}: minimum V={v_star:.5f} at r={r_star:.4f}")

# how many radial levels each l keeps
for delta in (0.001, 0.01, 0.05):
    p = params.replace(delta=delta)
    print(f"delta={delta}:", {l: max_radial_quantum_number(p, l) for l in range(4)})

# approach to the unscreened level is linear in delta
E0 = energy_kratzer(params, 0, 1)
for delta in (1e-2, 1e-3, 1e-4):
    gap = energy_screened(params.replace(delta=delta), 0, 1) - E0
    print(f"delta={delta:.0e}  E-E_kratzer={gap:.3e}")

# wavefunctions: same nodes, tails cut off by the screening
p = params.replace(delta=0.01)
for n in range(3):
    r = np.linspace(0.0, wavefunction_extent(Kind.SCREENED, p, n, 1), 4001)
    a, b = wavefunction_kratzer(r, params, n, 1), wavefunction_screened(r, p, n, 1)
    print(f"n={n}: norm {np.trapezoid(b**2, r):.6f}, largest difference from Kratzer {np.max(np.abs(a - b)):.2e}")
