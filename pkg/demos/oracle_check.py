"""
Checking the closed forms against a finite-difference solver
============================================================

The radial equation is discretised on a uniform grid and the lowest
eigenvalues found by Sturm bisection. Grid halving plus Richardson
extrapolation gets the oracle well below the tolerances used here.
"""

from monopole_spectra import (
    Kind,
    ModelParams,
    RadialGrid,
    effective_potential_kratzer,
    effective_potential_screened,
    energy_screened,
    greene_aldrich_error,
    refine_until,
    solve_radial,
    validate_spectrum,
)

params = ModelParams.from_values(alpha=0.8, A=0.5, D=1.0)

# one grid, no refinement: second-order error is already small
grid = RadialGrid(1e-4, 120.0, 20001)
res = solve_radial(lambda r: effective_potential_kratzer(r, params, 1), params, grid, 3)
print("single grid :", res.energies, "nodes", res.node_counts())

# refined and extrapolated
res = refine_until(lambda r: effective_potential_kratzer(r, params, 1), params, 3, 1e-10)
print("extrapolated:", res.energies, "on", res.grid)

report = validate_spectrum(params, [1, 2], [0, 1, 2], Kind.KRATZER, rel_tol=1e-5)
print(report.summary)
for row in report.rows:
    print(f"  n={row.n} l={row.l} rel err {row.rel_err:.1e}")

# screened levels: the oracle solves the exact potential, so the gap
# measures the exponential approximants
base = ModelParams.from_values(alpha=1.0, A=2.0, D=4.0)
for delta in (0.001, 0.01, 0.05, 0.1):
    p = base.replace(delta=delta)
    numeric = refine_until(lambda r: effective_potential_screened(r, p, 1), p, 1, 1e-8).energies[0]
    exact = energy_screened(p, 0, 1)
    print(f"delta={delta:<6} closed form {exact:.8f}  oracle {numeric:.8f}  gap {abs(exact / numeric - 1):.1e}")

# the same scale from the approximants themselves
print("1/r^2 approximant error at delta r = 0.1:", greene_aldrich_error(0.1, 1.0)[0])
