import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monopole_spectra import (
    DomainError,
    InadmissibleStateError,
    Kind,
    ModelParams,
    NoBoundStateError,
    NoMinimumError,
    bound_state,
    build_spectrum_table,
    derive_couplings,
    effective_potential_kratzer,
    effective_potential_screened,
    energy_kratzer,
    energy_screened,
    max_radial_quantum_number,
    potential_minimum,
    wavefunction_kratzer,
    wavefunction_screened,
)
from monopole_spectra.oracle import count_nodes
from monopole_spectra.spectra import SpectrumRow, SpectrumTable, wavefunction_extent

from conftest import hydrogen_params, kratzer_ode_residual

ELL_FIG1 = (1 + math.sqrt(11)) / 2


class TestPotentials:
    def test_kratzer_value(self, fig1_params):
        assert effective_potential_kratzer(1.0, fig1_params, 0) == pytest.approx(-0.75, rel=1e-15)

    def test_kratzer_coulomb_tail(self, fig1_params):
        v = effective_potential_kratzer(1e6, fig1_params, 0)
        assert v < 0 and v == pytest.approx(-1e-6, rel=1e-6)

    def test_domain(self, fig1_params):
        with pytest.raises(DomainError):
            effective_potential_kratzer(0.0, fig1_params, 1)
        with pytest.raises(DomainError):
            effective_potential_screened(np.array([1.0, -1.0]), fig1_params, 1)

    @pytest.mark.parametrize("l", [0, 1, 3])
    def test_unscreened_limit_matches_kratzer(self, l):
        p = ModelParams.from_values(alpha=0.7, A=2.0, D=4.0)
        r = np.geomspace(0.01, 100, 50)
        assert np.allclose(effective_potential_screened(r, p, l), effective_potential_kratzer(r, p, l),
                           rtol=1e-14, atol=0)

    @pytest.mark.parametrize("r, expected", [
        (0.5, 40.507986574153849472),
        (1.5, -2.2665177302065626975),
        (4.0, -1.9530414237735640145),
    ])
    def test_screened_hand_values(self, r, expected):
        # tests/oracles/hand_values.py
        p = ModelParams.from_values(alpha=0.5, A=2.0, D=4.0, delta=0.1)
        assert effective_potential_screened(r, p, 2) == pytest.approx(expected, rel=1e-10)

    def test_screened_decays_exponentially(self):
        p = ModelParams.from_values(alpha=0.5, A=2.0, D=4.0, delta=0.1)
        r = np.linspace(200.0, 400.0, 50)
        assert np.all(np.abs(effective_potential_screened(r, p, 0)) < np.exp(-0.1 * r / 2))

    def test_kratzer_minimum_closed_form(self):
        for alpha, l in [(1.0, 0), (0.8, 2), (0.6, 1)]:
            p = ModelParams.from_values(alpha=alpha, A=0.5, D=1.0)
            c = derive_couplings(p, l)
            B = l * (l + 1) / 2 + 0.25
            r_closed = 2 * B / (1.0 - c.K)
            r_star, v_star = potential_minimum(p, l, Kind.KRATZER)
            assert r_star == pytest.approx(r_closed, rel=1e-8)
            assert v_star == pytest.approx(effective_potential_kratzer(r_closed, p, l), rel=1e-12)

    def test_screening_pulls_minimum_inwards(self):
        p = ModelParams.from_values(alpha=0.5, A=2.0, D=4.0)
        r = [potential_minimum(p.replace(delta=d), 2, Kind.SCREENED)[0] for d in (0.0, 0.1, 0.2)]
        assert r[2] < r[1] < r[0]

    def test_well_deepens_with_alpha(self):
        p = ModelParams.from_values(alpha=0.5, A=2.0, D=4.0, delta=0.1)
        depth = [potential_minimum(p.replace(alpha=a), 2, Kind.SCREENED)[1] for a in (0.3, 0.5, 0.7)]
        assert depth[0] > depth[1] > depth[2]

    def test_no_minimum(self):
        p = ModelParams.from_values(alpha=0.3, A=0.5, D=1.0)  # K(0.3) > 2AD
        with pytest.raises(NoMinimumError):
            potential_minimum(p, 1, Kind.KRATZER)


class TestKratzerSpectrum:
    def test_reference_level(self, fig1_params):
        E = energy_kratzer(fig1_params, 0, 1)
        assert E == pytest.approx(-0.5 / ELL_FIG1**2, rel=1e-15)
        assert E == pytest.approx(-0.10733500838578400604, rel=1e-14)

    def test_threshold_is_an_error(self):
        S = derive_couplings(ModelParams.from_values(alpha=0.5, A=1.0, D=1.0), 0).S
        p = ModelParams.from_values(alpha=0.5, A=S / 4, D=1.0)
        with pytest.raises(NoBoundStateError):
            energy_kratzer(p, 0, 0)

    @pytest.mark.parametrize("n, l", [(n, l) for n in range(4) for l in range(4) if n + l <= 3])
    def test_hydrogen_limit(self, n, l):
        assert energy_kratzer(hydrogen_params(), n, l) == pytest.approx(-0.5 / (n + l + 1) ** 2, rel=1e-12)

    def test_increasing_in_n(self, fig1_params):
        E = [energy_kratzer(fig1_params, n, 2) for n in range(8)]
        assert all(a < b < 0 for a, b in zip(E, E[1:]))

    @pytest.mark.parametrize("alpha,n,l,expected", [
        (0.6, 0, 1, -0.054104793693078051162),
        (0.6, 2, 2, -0.011924390396532096436),
        (0.8, 1, 1, -0.04545833934024977027),
        (0.8, 2, 2, -0.017362606421667135521),
    ])
    def test_monopole_levels(self, alpha, n, l, expected):
        # tests/oracles/hand_values.py with brute-force S(alpha)
        p = ModelParams.from_values(alpha=alpha, A=0.5, D=1.0)
        assert energy_kratzer(p, n, l) == pytest.approx(expected, rel=1e-9)


class TestScreenedSpectrum:
    def test_reference_level(self, fig1_params):
        p = fig1_params.replace(delta=0.001)
        assert energy_screened(p, 0, 1) == pytest.approx(-0.10644419938411947534, rel=1e-12)

    def test_requires_screening(self, fig1_params):
        with pytest.raises(ValueError):
            energy_screened(fig1_params, 0, 1)

    def test_inadmissible(self, fig1_params):
        p = fig1_params.replace(delta=0.001)
        with pytest.raises(InadmissibleStateError):
            energy_screened(p, 30, 1)
        # numerator exactly zero: choose delta so that lambda_K^2 - eta^2 = d^2
        c = derive_couplings(fig1_params.replace(delta=1.0), 1)
        delta = -c.zeta / (c.d**2 - c.lambdaK_sq)
        with pytest.raises(InadmissibleStateError):
            energy_screened(fig1_params.replace(delta=delta * (1 + 1e-12)), 0, 1)

    def test_approaches_kratzer(self, fig1_params):
        Ek = energy_kratzer(fig1_params, 0, 1)
        gaps = [abs(energy_screened(fig1_params.replace(delta=d), 0, 1) - Ek) for d in (1e-2, 1e-3, 1e-4)]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[0] / gaps[1] == pytest.approx(10, rel=0.2)
        assert gaps[1] / gaps[2] == pytest.approx(10, rel=0.2)
        assert gaps[2] / abs(Ek) < 1e-3

    def test_max_n(self, fig1_params):
        assert max_radial_quantum_number(fig1_params.replace(delta=0.001), 1) == 29

    def test_max_n_is_tight(self, fig1_params):
        p = fig1_params.replace(delta=0.001)
        energy_screened(p, 29, 1)
        with pytest.raises(InadmissibleStateError):
            energy_screened(p, 30, 1)

    def test_max_n_none(self, fig1_params):
        assert max_radial_quantum_number(fig1_params.replace(delta=0.5), 1) is None

    def test_max_n_non_increasing_in_delta(self, fig1_params):
        values = [max_radial_quantum_number(fig1_params.replace(delta=d), 1)
                  for d in np.geomspace(1e-4, 0.3, 25)]
        values = [-1 if v is None else v for v in values]
        assert all(a >= b for a, b in zip(values, values[1:]))


class TestWavefunctions:
    @pytest.fixture
    def p(self):
        return ModelParams.from_values(alpha=0.8, A=0.5, D=1.0)

    def test_zero_at_origin(self, p):
        assert wavefunction_kratzer(0.0, p, 2, 1) == 0.0
        assert wavefunction_screened(0.0, p.replace(delta=0.01), 2, 1) == 0.0

    def test_ground_state_nodeless(self, p):
        r = np.linspace(1e-3, 150, 3000)
        assert np.all(wavefunction_kratzer(r, p, 0, 2) > 0)

    @pytest.mark.parametrize("n", range(4))
    def test_node_count(self, p, n):
        r = np.linspace(0, wavefunction_extent(Kind.KRATZER, p, n, 1), 20001)
        assert count_nodes(wavefunction_kratzer(r, p, n, 1)) == n

    @pytest.mark.parametrize("n", range(3))
    def test_screened_node_count(self, p, n):
        q = p.replace(delta=0.01)
        r = np.linspace(0, wavefunction_extent(Kind.SCREENED, q, n, 1), 20001)
        assert count_nodes(wavefunction_screened(r, q, n, 1)) == n

    @pytest.mark.parametrize("kind, n", [(Kind.KRATZER, 0), (Kind.KRATZER, 3), (Kind.SCREENED, 2)])
    def test_unit_norm(self, p, kind, n):
        q = p.replace(delta=0.01)
        f = wavefunction_kratzer if kind is Kind.KRATZER else wavefunction_screened
        r = np.linspace(0, wavefunction_extent(kind, q, n, 1), 200001)
        assert np.trapezoid(f(r, q, n, 1) ** 2, r) == pytest.approx(1.0, rel=1e-8)

    @pytest.mark.parametrize("n, l", [(0, 1), (1, 0), (2, 2), (3, 1)])
    def test_satisfies_radial_equation(self, p, n, l):
        assert kratzer_ode_residual(p, n, l) < 1e-6

    def test_decay(self, p):
        for kind, f, q in [(Kind.KRATZER, wavefunction_kratzer, p),
                           (Kind.SCREENED, wavefunction_screened, p.replace(delta=0.01))]:
            r_end = wavefunction_extent(kind, q, 1, 1)
            assert abs(f(r_end, q, 1, 1)) < 1e-12

    def test_screened_converges_to_kratzer(self, p):
        q = p.replace(delta=1e-4)
        r = np.linspace(0.5, 40, 60)
        a = wavefunction_kratzer(r, p, 1, 1)
        b = wavefunction_screened(r, q, 1, 1)
        peak = np.max(np.abs(a))
        assert np.max(np.abs(a - b)) < 0.01 * peak

    def test_inadmissible_wavefunction(self, p):
        with pytest.raises(InadmissibleStateError):
            wavefunction_screened(1.0, p.replace(delta=0.5), 0, 1)
        with pytest.raises(DomainError):
            wavefunction_kratzer(-1.0, p, 0, 1)

    def test_bound_state_handle(self, p):
        s = bound_state(p, 1, 2)
        assert s.energy == energy_kratzer(p, 1, 2)
        assert s.normalization > 0
        assert s(3.0) == wavefunction_kratzer(3.0, p, 1, 2)


class TestSpectrumTable:
    def test_sorted_and_monotone(self, fig1_params):
        table = build_spectrum_table(fig1_params, 3, 4)
        assert [(r.l, r.n) for r in table.rows] == sorted((r.l, r.n) for r in table.rows)
        for l in range(4):
            E = [r.energy for r in table.rows if r.l == l]
            assert all(a < b for a, b in zip(E, E[1:]))

    def test_fig3_ground_level_lowest(self, fig3_params):
        for alpha in (0.3, 0.5, 0.7, 0.9, 1.0):
            table = build_spectrum_table(fig3_params.replace(alpha=alpha), 4, 2, Kind.SCREENED)
            assert min(table.rows, key=lambda r: r.energy)[:2] == (0, 0)

    def test_fig1_levels_deepen_with_alpha(self):
        alphas = np.linspace(0.4, 0.95, 12)
        for n in range(3):
            for l in (1, 2, 3):
                E = [energy_kratzer(ModelParams.from_values(alpha=a, A=0.5, D=1.0), n, l) for a in alphas]
                assert all(x > y for x, y in zip(E, E[1:]))

    def test_truncation_and_warnings(self, fig1_params):
        p = fig1_params.replace(delta=0.01)
        with pytest.warns(UserWarning):
            table = build_spectrum_table(p, 2, 50, Kind.SCREENED)
        for row in table.rows:
            assert row.n <= max_radial_quantum_number(p, row.l)
        assert table.warnings

    def test_no_bound_states_omitted(self):
        p = ModelParams.from_values(alpha=0.3, A=0.5, D=1.0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            table = build_spectrum_table(p, 1, 1)
        assert table.rows == () and len(table.warnings) == 4

    def test_invariants_enforced(self, fig1_params):
        with pytest.raises(ValueError):
            SpectrumTable(fig1_params, Kind.KRATZER, (SpectrumRow(0, 1, 0.1),))
        with pytest.raises(ValueError):
            SpectrumTable(fig1_params, Kind.KRATZER, (SpectrumRow(0, 2, -0.1), SpectrumRow(0, 1, -0.2)))


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0.4, 1.0), A=st.floats(0.2, 3.0), D=st.floats(0.5, 5.0),
       delta=st.floats(1e-4, 0.2), n=st.integers(0, 6), l=st.integers(0, 6))
def test_returned_levels_are_bound_and_admissible(alpha, A, D, delta, n, l):
    p = ModelParams.from_values(alpha=alpha, A=A, D=D, delta=delta)
    zeta = derive_couplings(p, l).zeta
    try:
        E = energy_kratzer(p, n, l)
        assert zeta < 0 and E < 0
    except NoBoundStateError:
        assert zeta >= 0
    n_max = max_radial_quantum_number(p, l)
    try:
        Es = energy_screened(p, n, l)
        assert Es < 0 and n_max is not None and n <= n_max
    except InadmissibleStateError:
        assert n_max is None or n > n_max
