"""Closed-form potentials, spectra and wavefunctions.

Two models share the machinery here:

* ``Kind.KRATZER``: Kratzer well plus the Coulomb-like self-interaction,
  solved exactly through the confluent hypergeometric polynomial.
* ``Kind.SCREENED``: both interactions damped by exp(-delta r); solved after
  replacing 1/r and 1/r^2 by exponential approximants, which reduces the
  radial equation to the Gauss hypergeometric equation.

Wavefunctions are reduced radial functions psi(r) = r R(r), normalised so
that the integral of psi^2 over (0, inf) is one.
"""
from __future__ import annotations

import enum
import functools
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq

from .errors import (
    DomainError,
    InadmissibleStateError,
    InvalidParameterError,
    MonopoleSpectraError,
    NoBoundStateError,
    NoMinimumError,
)
from .model import ModelParams, QuantumNumbers, derive_couplings
from .special import hyp1f1_terminating, hyp2f1_terminating, integrate_radial


class Kind(str, enum.Enum):
    KRATZER = "kratzer"
    SCREENED = "screened"


def _as_radius(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("effective potentials are defined for r > 0 only")
    return r


def _scalar(a):
    return a[()] if a.ndim == 0 else a


def _centrifugal(params, l):
    return params.hbar**2 * l * (l + 1) / (2.0 * params.mass)


def _self_coupling(params, l=0):
    return derive_couplings(params, l).K


def effective_potential_kratzer(r, params: ModelParams, l: int):
    """[hbar^2 l(l+1)/(2M) + D A^2]/r^2 + (K - 2DA)/r."""
    r = _as_radius(r)
    B = _centrifugal(params, l) + params.D * params.A**2
    C = _self_coupling(params, l) - 2.0 * params.D * params.A
    return _scalar(B / r**2 + C / r)


def effective_potential_screened(r, params: ModelParams, l: int):
    """Centrifugal term plus the exp(-delta r) damped Kratzer and self-interaction terms."""
    r = _as_radius(r)
    A, D, delta = params.A, params.D, params.delta
    K = _self_coupling(params, l)
    e1 = np.exp(-delta * r)
    e2 = e1 * e1
    v = (
        _centrifugal(params, l) / r**2
        - 2.0 * D * (A * e1 / r - A**2 * e2 / (2.0 * r**2))
        + K * e1 / r
    )
    return _scalar(v)


def _potential_derivative(r, params, l, kind):
    A, D = params.A, params.D
    K = _self_coupling(params, l)
    c_l = _centrifugal(params, l)
    C = K - 2.0 * D * A
    if kind is Kind.KRATZER:
        B = c_l + D * A**2
        return -2.0 * B / r**3 - C / r**2
    delta = params.delta
    e1 = math.exp(-delta * r)
    return (
        -2.0 * c_l / r**3
        + C * e1 * (-delta / r - 1.0 / r**2)
        + D * A**2 * e1 * e1 * (-2.0 * delta / r**2 - 2.0 / r**3)
    )


def potential(kind: Kind, r, params: ModelParams, l: int):
    kind = Kind(kind)
    if kind is Kind.KRATZER:
        return effective_potential_kratzer(r, params, l)
    return effective_potential_screened(r, params, l)


def potential_minimum(params: ModelParams, l: int, kind: Kind = Kind.KRATZER):
    """Locate the deepest local minimum of the chosen effective potential.

    A logarithmic scan brackets every sign change of V'(r) from negative to
    positive; each bracket is then closed with Brent's method on the analytic
    derivative, which pins r_star far below the sqrt(eps) limit of
    value-comparison searches.

    Returns ``(r_star, v_star)``.
    """
    kind = Kind(kind)
    if kind is Kind.KRATZER and derive_couplings(params, l).zeta >= 0:
        raise NoMinimumError("Kratzer potential has no minimum unless 2DA > K(alpha)")
    scale = params.A
    grid = np.geomspace(1e-6 * scale, 1e6 * scale, 4001)
    if kind is Kind.SCREENED and params.delta > 0:
        grid = grid[grid * params.delta < 700.0]
    dv = np.array([_potential_derivative(r, params, l, kind) for r in grid])
    candidates = []
    for i in np.flatnonzero((dv[:-1] < 0) & (dv[1:] >= 0)):
        a, b = grid[i], grid[i + 1]
        if dv[i + 1] == 0:
            r_star = b
        else:
            r_star = brentq(_potential_derivative, a, b, args=(params, l, kind),
                            xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
        candidates.append((float(potential(kind, r_star, params, l)), float(r_star)))
    if not candidates:
        raise NoMinimumError(f"{kind.value} potential is monotone on the search bracket")
    v_star, r_star = min(candidates)
    return r_star, v_star


def energy_kratzer(params: ModelParams, n: int, l: int) -> float:
    """-(alpha^2 hbar^2 / 2M) zeta^2 / (n + ell)^2; needs zeta < 0."""
    QuantumNumbers(n, l)
    c = derive_couplings(params, l)
    if c.zeta >= 0:
        raise NoBoundStateError(
            f"no bound states: zeta = {c.zeta:.6g} >= 0 (2AD does not exceed K(alpha))"
        )
    return -params.kinetic_prefactor * c.zeta**2 / (n + c.ell) ** 2


def _screened_numerator(params, n, l):
    if not params.delta > 0:
        raise InvalidParameterError("screened spectrum requires delta > 0")
    QuantumNumbers(n, l)
    c = derive_couplings(params, l)
    numerator = c.lambdaK_sq - c.eta_sq - (c.d + n) ** 2
    return c, numerator


def energy_screened(params: ModelParams, n: int, l: int) -> float:
    """-(hbar^2 alpha^2 delta^2 / 2M) (lambda_K^2 - eta^2 - (d+n)^2)^2 / (d+n)^2."""
    c, numerator = _screened_numerator(params, n, l)
    if not numerator > 0:
        raise InadmissibleStateError(
            f"state n={n}, l={l} is not bound: lambda_K^2 - eta^2 - (d+n)^2 = {numerator:.6g} <= 0"
        )
    return -params.kinetic_prefactor * params.delta**2 * numerator**2 / (c.d + n) ** 2


def energy(kind: Kind, params: ModelParams, n: int, l: int) -> float:
    kind = Kind(kind)
    if kind is Kind.KRATZER:
        return energy_kratzer(params, n, l)
    return energy_screened(params, n, l)


def max_radial_quantum_number(params: ModelParams, l: int) -> Optional[int]:
    """Largest n with n < sqrt(lambda_K^2 - eta^2) - d, or None if there is none."""
    if not params.delta > 0:
        raise InvalidParameterError("the bound on n applies to the screened model (delta > 0)")
    c = derive_couplings(params, l)
    reach = c.lambdaK_sq - c.eta_sq
    if reach <= 0:
        return None
    bound = math.sqrt(reach) - c.d
    if bound <= 0:
        return None
    n = math.ceil(bound) - 1
    # rounding guard so this agrees with the admissibility test in energy_screened
    while n >= 0 and not c.lambdaK_sq - c.eta_sq - (c.d + n) ** 2 > 0:
        n -= 1
    return n if n >= 0 else None


# --- wavefunctions -------------------------------------------------------


def _kratzer_profile(params, n, l):
    """Unnormalised psi_{n l}(r) and an integration cutoff."""
    c = derive_couplings(params, l)
    E = energy_kratzer(params, n, l)
    K_b = math.sqrt(-2.0 * params.mass * E / (params.alpha**2 * params.hbar**2))
    ell = c.ell
    rho0 = 2.0 * (n + ell)

    def profile(r):
        r = np.asarray(r, dtype=float)
        if np.any(r < 0):
            raise DomainError("wavefunctions are defined for r >= 0")
        rho = 2.0 * K_b * r
        out = np.zeros_like(rho)
        pos = rho > 0
        rp = rho[pos]
        envelope = np.exp(ell * np.log(rp / rho0) - 0.5 * (rp - rho0))
        out[pos] = envelope * hyp1f1_terminating(n, 2.0 * ell, rp)
        return out

    r_cut = (4.0 * (n + ell) + 100.0) / (2.0 * K_b)
    return profile, r_cut


def _screened_profile(params, n, l):
    c, numerator = _screened_numerator(params, n, l)
    if not numerator > 0:
        raise InadmissibleStateError(f"state n={n}, l={l} violates the bound on n")
    delta, d = params.delta, c.d
    kp = numerator / (2.0 * (d + n))
    k_b = 2.0 * delta * kp
    eta2 = d + kp + math.sqrt(kp**2 + c.lambdaK_sq - c.eta_sq)
    r0 = (n + d) / k_b
    log_ref = d * math.log(-math.expm1(-2.0 * delta * r0)) - k_b * r0

    def profile(r):
        r = np.asarray(r, dtype=float)
        if np.any(r < 0):
            raise DomainError("wavefunctions are defined for r >= 0")
        out = np.zeros_like(r)
        pos = r > 0
        rp = r[pos]
        y = -np.expm1(-2.0 * delta * rp)
        envelope = np.exp(d * np.log(y) - k_b * rp - log_ref)
        out[pos] = envelope * hyp2f1_terminating(n, eta2, 2.0 * d, y)
        return out

    r_cut = (4.0 * (n + d) + 100.0) / (2.0 * k_b)
    return profile, r_cut


@functools.lru_cache(maxsize=512)
def _normalized_profile(params, n, l, kind):
    if kind is Kind.KRATZER:
        profile, r_cut = _kratzer_profile(params, n, l)
    else:
        profile, r_cut = _screened_profile(params, n, l)
    norm_sq = integrate_radial(lambda r: float(profile(r)) ** 2, 0.0, r_cut,
                               rel_tol=1e-11, initial_panels=64)
    C = 1.0 / math.sqrt(norm_sq)
    # fix the sign so psi > 0 just outside the origin
    r_probe = r_cut * 1e-6
    if profile(r_probe) < 0:
        C = -C
    return profile, C, r_cut


def _wavefunction(kind, r, params, n, l):
    QuantumNumbers(n, l)
    profile, C, _ = _normalized_profile(params, n, l, kind)
    return _scalar(C * profile(r))


def wavefunction_kratzer(r, params: ModelParams, n: int, l: int):
    """Normalised reduced radial function C e^{-rho/2} rho^ell 1F1(-n, 2 ell, rho), rho = 2 K_b r."""
    return _wavefunction(Kind.KRATZER, r, params, n, l)


def wavefunction_screened(r, params: ModelParams, n: int, l: int):
    """Normalised C y^d e^{-k_b r} 2F1(-n, eta2, 2d; y) with y = 1 - exp(-2 delta r)."""
    return _wavefunction(Kind.SCREENED, r, params, n, l)


def wavefunction(kind: Kind, r, params: ModelParams, n: int, l: int):
    return _wavefunction(Kind(kind), r, params, n, l)


def wavefunction_extent(kind: Kind, params: ModelParams, n: int, l: int) -> float:
    """Radius beyond which the normalised state is negligible (below ~1e-20 of its peak)."""
    return _normalized_profile(params, n, l, Kind(kind))[2]


@dataclass(frozen=True)
class BoundState:
    """A bound level with a handle to its normalised wavefunction."""

    quantum: QuantumNumbers
    energy: float
    kind: Kind
    normalization: float
    params: ModelParams = field(repr=False)

    def __post_init__(self):
        if not self.energy < 0:
            raise InvalidParameterError("bound-state energy must be negative")
        if not self.normalization > 0:
            raise InvalidParameterError("normalization must be positive")

    def __call__(self, r):
        return wavefunction(self.kind, r, self.params, self.quantum.n, self.quantum.l)


def bound_state(params: ModelParams, n: int, l: int, kind: Kind = Kind.KRATZER) -> BoundState:
    kind = Kind(kind)
    E = energy(kind, params, n, l)
    _, C, _ = _normalized_profile(params, n, l, kind)
    return BoundState(QuantumNumbers(n, l), E, kind, abs(C), params)


class SpectrumRow(NamedTuple):
    n: int
    l: int
    energy: float


@dataclass(frozen=True)
class SpectrumTable:
    params: ModelParams
    kind: Kind
    rows: tuple
    warnings: tuple = ()

    def __post_init__(self):
        keys = [(row.l, row.n) for row in self.rows]
        if keys != sorted(keys):
            raise InvalidParameterError("spectrum rows must be sorted by (l, n)")
        for row in self.rows:
            if not row.energy < 0:
                raise InvalidParameterError(f"non-negative energy in row {row}")
            if self.kind is Kind.SCREENED:
                n_max = max_radial_quantum_number(self.params, row.l)
                if n_max is None or row.n > n_max:
                    raise InvalidParameterError(f"row {row} violates the bound on n")

    def energy(self, n, l):
        for row in self.rows:
            if row.n == n and row.l == l:
                return row.energy
        raise KeyError((n, l))


def build_spectrum_table(params: ModelParams, l_max: int, per_l_n_max: int,
                         kind: Kind = Kind.KRATZER, l_min: int = 0) -> SpectrumTable:
    """Every admissible (n, l) with l_min <= l <= l_max and n <= per_l_n_max.

    States that fail (no bound state, or beyond the screened bound on n) are
    left out and described in ``warnings`` instead.
    """
    kind = Kind(kind)
    rows, notes = [], []
    for l in range(l_min, l_max + 1):
        n_top = per_l_n_max
        if kind is Kind.SCREENED:
            n_allowed = max_radial_quantum_number(params, l)
            if n_allowed is None:
                notes.append(f"l={l}: no admissible screened states")
                continue
            if n_allowed < per_l_n_max:
                notes.append(f"l={l}: n > {n_allowed} omitted by the bound on n")
                n_top = n_allowed
        for n in range(n_top + 1):
            try:
                rows.append(SpectrumRow(n, l, energy(kind, params, n, l)))
            except MonopoleSpectraError as exc:
                notes.append(f"n={n}, l={l}: {exc}")
    for note in notes:
        warnings.warn(note, stacklevel=2)
    return SpectrumTable(params, kind, tuple(rows), tuple(notes))
