"""Bound states of a charged particle in global-monopole spacetime under
Kratzer and screened Kratzer potentials, with a finite-difference oracle."""

from .errors import (
    ConfigError,
    DomainError,
    GridTooCoarseWarning,
    InadmissibleStateError,
    InsufficientBoundStatesError,
    InvalidParameterError,
    MonopoleSpectraError,
    NoBoundStateError,
    NoMinimumError,
    NonConvergenceError,
    ToleranceNotReachedError,
)
from .model import (
    DerivedCouplings,
    KratzerParams,
    ModelParams,
    MonopoleGeometry,
    PhysicalConstants,
    QuantumNumbers,
    ScreeningParams,
    derive_couplings,
)
from .special import (
    SeriesValue,
    hyp1f1_terminating,
    hyp2f1_terminating,
    integrate_radial,
    monopole_series_S,
)
from .spectra import (
    BoundState,
    Kind,
    SpectrumTable,
    bound_state,
    build_spectrum_table,
    effective_potential_kratzer,
    effective_potential_screened,
    energy,
    energy_kratzer,
    energy_screened,
    max_radial_quantum_number,
    potential_minimum,
    wavefunction,
    wavefunction_extent,
    wavefunction_kratzer,
    wavefunction_screened,
)
from .oracle import (
    EigenResult,
    RadialGrid,
    ValidationReport,
    count_nodes,
    greene_aldrich_error,
    refine_until,
    solve_radial,
    sturm_count,
    validate_spectrum,
)
from .config import RunConfig, load_config, parse_config
from .figures import CurveSpec, FigureSpec, default_figure_spec, figure_data

__version__ = "0.1.0"
