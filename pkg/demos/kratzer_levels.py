"""
Kratzer levels in a monopole background
=======================================

The closed-form energies depend on alpha through the kinetic factor and
through the self-interaction coupling. Below some alpha the coupling beats
the Kratzer attraction and no level survives.
"""

import numpy as np

from monopole_spectra import (
    Kind,
    ModelParams,
    NoBoundStateError,
    build_spectrum_table,
    derive_couplings,
    energy_kratzer,
)

params = ModelParams.from_values(alpha=0.8, A=0.5, D=1.0)

c = derive_couplings(params, l=1)
print(f"S={c.S:.6f}  K={c.K:.6f}  zeta={c.zeta:.6f}  ell={c.ell:.6f}")

table = build_spectrum_table(params, l_max=3, per_l_n_max=2, kind=Kind.KRATZER, l_min=1)
for row in table.rows:
    print(f"n={row.n} l={row.l}  E={row.energy:.12f}")

# the levels drop as alpha approaches flat space
for alpha in np.linspace(0.4, 1.0, 7):
    p = params.replace(alpha=alpha)
    print(f"alpha={alpha:.1f}", "  ".join(f"{energy_kratzer(p, n, 1):+.6f}" for n in range(3)))

# and vanish once zeta turns positive
try:
    energy_kratzer(params.replace(alpha=0.3), 0, 1)
except NoBoundStateError as exc:
    print("alpha=0.3:", exc)

# with D A^2 -> 0 and 2 D A = 1 the hydrogen series comes back
hydrogen = ModelParams.from_values(alpha=1.0, A=1e-14, D=0.5e14)
print([round(energy_kratzer(hydrogen, n, 0), 12) for n in range(4)])
