"""Problem parameters and the dimensionless couplings derived from them."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidParameterError
from .special import SeriesValue, monopole_series_S

DEFAULT_SERIES_TOLERANCE = 1e-10


def _positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise InvalidParameterError(f"{name} must be a finite positive number, got {value!r}")


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.0
    mass: float = 1.0
    charge: float = 1.0

    def __post_init__(self):
        _positive("hbar", self.hbar)
        _positive("mass", self.mass)
        _positive("charge", self.charge)


@dataclass(frozen=True)
class MonopoleGeometry:
    """Deficit parameter alpha; alpha = 1 is flat space."""

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a) and 0.0 < a <= 1.0):
            raise InvalidParameterError(f"alpha must lie in (0,1], got {a!r}")


@dataclass(frozen=True)
class KratzerParams:
    A: float
    D: float

    def __post_init__(self):
        _positive("A", self.A)
        _positive("D", self.D)


@dataclass(frozen=True)
class ScreeningParams:
    delta: float = 0.0

    def __post_init__(self):
        d = self.delta
        if not (isinstance(d, (int, float)) and math.isfinite(d) and d >= 0.0):
            raise InvalidParameterError(f"delta must be a finite number >= 0, got {d!r}")


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InvalidParameterError(f"{name} must be a non-negative integer, got {v!r}")


@dataclass(frozen=True)
class ModelParams:
    """Full problem definition: constants, geometry, Kratzer well and screening."""

    constants: PhysicalConstants
    geometry: MonopoleGeometry
    kratzer: KratzerParams
    screening: ScreeningParams = field(default_factory=ScreeningParams)
    series_tolerance: float = DEFAULT_SERIES_TOLERANCE

    def __post_init__(self):
        if not self.series_tolerance > 0:
            raise InvalidParameterError("series_tolerance must be positive")

    @classmethod
    def from_values(cls, *, alpha, A, D, delta=0.0, hbar=1.0, mass=1.0, charge=1.0,
                    series_tolerance=DEFAULT_SERIES_TOLERANCE):
        return cls(
            PhysicalConstants(hbar, mass, charge),
            MonopoleGeometry(alpha),
            KratzerParams(A, D),
            ScreeningParams(delta),
            series_tolerance,
        )

    def replace(self, **changes) -> "ModelParams":
        """Copy with any of alpha, A, D, delta, hbar, mass, charge changed."""
        values = dict(
            alpha=self.alpha, A=self.A, D=self.D, delta=self.delta,
            hbar=self.hbar, mass=self.mass, charge=self.charge,
            series_tolerance=self.series_tolerance,
        )
        unknown = set(changes) - set(values)
        if unknown:
            raise TypeError(f"unknown parameter(s): {sorted(unknown)}")
        values.update(changes)
        return ModelParams.from_values(**values)

    # flat accessors; the nested blocks stay the canonical storage
    hbar = property(lambda self: self.constants.hbar)
    mass = property(lambda self: self.constants.mass)
    charge = property(lambda self: self.constants.charge)
    alpha = property(lambda self: self.geometry.alpha)
    A = property(lambda self: self.kratzer.A)
    D = property(lambda self: self.kratzer.D)
    delta = property(lambda self: self.screening.delta)

    @property
    def kinetic_prefactor(self) -> float:
        """alpha^2 hbar^2 / (2M), the coefficient of -psi'' in the radial equation."""
        return self.alpha**2 * self.hbar**2 / (2.0 * self.mass)


@dataclass(frozen=True)
class DerivedCouplings:
    S: float
    S_error_bound: float
    K: float
    zeta: float
    j_sq: float
    ell: float
    lambda_sq: float
    lambdaK_sq: float
    eta_sq: Optional[float]
    d: float


def derive_couplings(
    params: ModelParams, l: int, series_tolerance: Optional[float] = None
) -> DerivedCouplings:
    """Compute every derived coupling for angular momentum ``l``.

    ``series_tolerance`` defaults to the one carried by ``params``.
    The inverse-square strength is taken as j^2 = lambda^2 + lambda_K^2, i.e. the
    repulsive A^2 term adds to the centrifugal barrier, which makes the Kratzer
    exponent ``ell`` and the Frobenius exponent ``d`` the same number.
    """
    if not isinstance(params, ModelParams):
        raise InvalidParameterError("params must be a ModelParams instance")
    QuantumNumbers(0, l)
    if series_tolerance is None:
        series_tolerance = params.series_tolerance
    if not (series_tolerance > 0):
        raise InvalidParameterError("series_tolerance must be positive")

    hbar, M, e = params.hbar, params.mass, params.charge
    alpha, A, D, delta = params.alpha, params.A, params.D, params.delta

    series: SeriesValue = monopole_series_S(alpha, series_tolerance)
    K = e**2 * series.value / 2.0
    a2h2 = alpha**2 * hbar**2
    zeta = M * (K - 2.0 * A * D) / a2h2
    lambda_sq = l * (l + 1) / alpha**2
    lambdaK_sq = 2.0 * M * D * A**2 / a2h2
    j_sq = lambda_sq + lambdaK_sq
    ell = (1.0 + math.sqrt(4.0 * j_sq + 1.0)) / 2.0
    d = 0.5 + 0.5 * math.sqrt(4.0 * lambda_sq + 4.0 * lambdaK_sq + 1.0)
    eta_sq = zeta / delta if delta > 0 else None
    return DerivedCouplings(
        S=series.value,
        S_error_bound=series.error_bound,
        K=K,
        zeta=zeta,
        j_sq=j_sq,
        ell=ell,
        lambda_sq=lambda_sq,
        lambdaK_sq=lambdaK_sq,
        eta_sq=eta_sq,
        d=d,
    )
