import numpy as np
import pytest

from monopole_spectra import ModelParams

# brute-force values of S(alpha): 10**7 explicit terms in extended precision plus
# the integral tail (tests/oracles/series_bruteforce.py)
S_BRUTE = {
    0.5: 1.0909391332379943,
    0.6: 0.7438315333549155,
    0.8: 0.292801288748471,
    0.99: 0.012428513887930207,
}


@pytest.fixture
def fig1_params():
    """The fig1 parameter set in flat space: S(1) = 0 so the tail is pure Kratzer."""
    return ModelParams.from_values(alpha=1.0, A=0.5, D=1.0)


@pytest.fixture
def fig3_params():
    return ModelParams.from_values(alpha=1.0, A=2.0, D=4.0, delta=0.001)


def hydrogen_params(alpha=1.0):
    """D A^2 -> 0 with 2 D A = 1: a unit attractive Coulomb tail."""
    A = 1e-14
    return ModelParams.from_values(alpha=alpha, A=A, D=0.5 / A)


def kratzer_ode_residual(p, n, l, samples=400):
    """Largest pointwise relative residual of -c psi'' + (V - E) psi on interior points.

    psi'' is the five-point stencil at h and 2h combined by Richardson
    extrapolation (O(h^6)), so h can stay large enough that rounding in the
    stencil does not swamp the check near nodes. Each point is scaled by the
    largest of the three terms there.
    """
    from monopole_spectra import Kind, effective_potential_kratzer, energy_kratzer
    from monopole_spectra import wavefunction_extent, wavefunction_kratzer

    f = lambda x: wavefunction_kratzer(x, p, n, l)
    stencil = lambda r, h: (-f(r + 2 * h) + 16 * f(r + h) - 30 * f(r) + 16 * f(r - h) - f(r - 2 * h)) / (12 * h * h)
    h = 1e-2
    r = np.linspace(0.2, 0.5 * wavefunction_extent(Kind.KRATZER, p, n, l), samples)
    psi = f(r)
    d2 = (16 * stencil(r, h) - stencil(r, 2 * h)) / 15
    c = p.kinetic_prefactor
    V = effective_potential_kratzer(r, p, l)
    E = energy_kratzer(p, n, l)
    scale = np.maximum.reduce([np.abs(c * d2), np.abs(V * psi), np.abs(E * psi)])
    scale = np.maximum(scale, 1e-8 * scale.max())
    return float(np.max(np.abs(-c * d2 + (V - E) * psi) / scale))
