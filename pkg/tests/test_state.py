import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import (
    DegenerateStateError,
    IncompatibleGridsError,
    InvalidArgumentError,
    UnsupportedParameterError,
)
from src.spectral.grid import make_grid
from src.spectral.state import (
    BETA_MIN,
    JointAmplitude,
    Polarization,
    PolarizationChannel,
    TwoPhotonState,
    apply_interferometer,
    apply_path_phase,
    build_spdc_spectrum,
    gaussian_wavepacket,
    product_state,
)

HH = PolarizationChannel.HH
HV = PolarizationChannel.HV
VH = PolarizationChannel.VH


class TestPolarizationChannel:
    def test_swapped(self):
        assert HV.swapped is VH
        assert VH.swapped is HV
        assert HH.swapped is HH

    def test_of(self):
        assert PolarizationChannel.of(Polarization.V, Polarization.H) is VH
        assert VH.first is Polarization.V
        assert VH.second is Polarization.H


class TestAmplitudes:
    def test_rejects_wrong_shape(self, small_grid):
        with pytest.raises(InvalidArgumentError):
            JointAmplitude(grid=small_grid, matrix=np.zeros((3, 3)))

    def test_rejects_non_finite(self, small_grid):
        matrix = np.ones((9, 9), dtype=complex)
        matrix[2, 3] = np.nan
        with pytest.raises(InvalidArgumentError):
            JointAmplitude(grid=small_grid, matrix=matrix)

    def test_matrix_is_a_read_only_copy(self, small_grid):
        source = np.ones((9, 9))
        amplitude = JointAmplitude(grid=small_grid, matrix=source)
        source[0, 0] = 5.0
        assert amplitude.matrix[0, 0] == 1.0
        with pytest.raises(ValueError):
            amplitude.matrix[0, 0] = 2.0

    def test_channels_on_other_grid(self, small_grid):
        other = make_grid(2.0, 9)
        with pytest.raises(IncompatibleGridsError):
            TwoPhotonState(grid=small_grid, channels={HH: JointAmplitude(other, np.ones((9, 9)))})

    def test_absent_channel_reads_zero(self, small_grid):
        state = TwoPhotonState.from_matrices(small_grid, {HV: np.ones((9, 9))})
        assert state.present_channels() == (HV,)
        assert not np.any(state.matrix(VH))

    def test_normalize_zero_state(self, small_grid):
        with pytest.raises(DegenerateStateError):
            TwoPhotonState(grid=small_grid).normalized()
        with pytest.raises(DegenerateStateError):
            TwoPhotonState.from_matrices(small_grid, {HH: np.zeros((9, 9))}).normalized()

    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_normalized_has_unit_norm(self, random_state, small_grid, seed):
        state = random_state(small_grid, seed).scaled(3.7 - 1.2j)
        assert math.isclose(state.normalized().norm_squared(), 1.0, rel_tol=1e-12)


class TestSpdcSpectrum:
    @pytest.mark.parametrize("beta", [BETA_MIN, 0.2, 1.0, math.inf])
    def test_normalized_symmetric_single_channel(self, default_grid, beta):
        state = build_spdc_spectrum(default_grid, beta)
        assert state.present_channels() == (HH,)
        assert math.isclose(state.norm_squared(), 1.0, rel_tol=1e-12)
        matrix = state.matrix(HH)
        np.testing.assert_array_equal(matrix, matrix.T)

    def test_independent_photons_factorize(self, medium_grid):
        matrix = build_spdc_spectrum(medium_grid, math.inf).matrix(HH)
        assert np.linalg.matrix_rank(matrix) == 1

    def test_narrow_pump_anticorrelates(self, medium_grid):
        matrix = np.abs(build_spdc_spectrum(medium_grid, 0.2).matrix(HH))
        n = medium_grid.n_points
        # nu1 = -nu2 carries the weight, nu1 = nu2 is suppressed away from the centre
        assert matrix[n // 2 + 10, n // 2 - 10] > 1e3 * matrix[n // 2 + 10, n // 2 + 10]

    @pytest.mark.parametrize("beta", [0.0, 0.01, -1.0, float("nan")])
    def test_rejects_unresolvable_beta(self, small_grid, beta):
        with pytest.raises(UnsupportedParameterError):
            build_spdc_spectrum(small_grid, beta)


class TestPropagationPhases:
    def test_zero_path_is_identity(self, small_grid):
        state = build_spdc_spectrum(small_grid, 1.0)
        assert apply_path_phase(state, 0.0, 0.0) is state

    def test_path_phase_preserves_norm(self, small_grid, random_state):
        state = random_state(small_grid, 3)
        moved = apply_path_phase(state, -1.3, 2.1)
        assert math.isclose(moved.norm_squared(), 1.0, rel_tol=1e-12)
        expected = state.matrix(HV) * np.outer(np.exp(-1.3j * small_grid.values),
                                               np.exp(2.1j * small_grid.values))
        np.testing.assert_allclose(moved.matrix(HV), expected, rtol=1e-14)

    def test_interferometer_renormalizes(self, medium_grid):
        state = apply_interferometer(build_spdc_spectrum(medium_grid, 0.5), 5.0, 0.3)
        assert math.isclose(state.norm_squared(), 1.0, rel_tol=1e-12)

    def test_interferometer_filters_beam_one_only(self, medium_grid):
        source = build_spdc_spectrum(medium_grid, math.inf)
        filtered = apply_interferometer(source, 1.0, 0.0)
        ratio = filtered.matrix(HH) / source.matrix(HH)
        # rows carry the filter, columns are untouched
        np.testing.assert_allclose(ratio, np.repeat(ratio[:, :1], medium_grid.n_points, axis=1),
                                   rtol=1e-10)

    def test_interferometer_annihilation(self, small_grid):
        with pytest.raises(DegenerateStateError):
            apply_interferometer(build_spdc_spectrum(small_grid, math.inf), 0.0, math.pi / 2)


class TestWavepackets:
    def test_gaussian_wavepacket_normalized(self, small_grid):
        wp = gaussian_wavepacket(small_grid, width=0.8, center=0.2, delay=1.0, h=1.0, v=1j)
        assert math.isclose(wp.norm_squared(), 1.0, rel_tol=1e-12)
        assert set(wp.amps) == {Polarization.H, Polarization.V}

    def test_zero_polarization_component_is_dropped(self, small_grid):
        wp = gaussian_wavepacket(small_grid, h=1.0, v=0.0)
        assert set(wp.amps) == {Polarization.H}
        assert not np.any(wp.amplitude(Polarization.V))

    def test_invalid_width(self, small_grid):
        with pytest.raises(InvalidArgumentError):
            gaussian_wavepacket(small_grid, width=0.0)

    def test_product_state_channels(self, small_grid):
        wp1 = gaussian_wavepacket(small_grid, h=1.0)
        wp2 = gaussian_wavepacket(small_grid, h=1.0, v=1.0)
        state = product_state(wp1, wp2)
        assert state.present_channels() == (HH, HV)
        assert math.isclose(state.norm_squared(), 1.0, rel_tol=1e-12)
        np.testing.assert_allclose(state.matrix(HH), state.matrix(HV), rtol=1e-15)

    def test_product_state_needs_one_grid(self, small_grid):
        wp1 = gaussian_wavepacket(small_grid)
        wp2 = gaussian_wavepacket(make_grid(3.0, 11))
        with pytest.raises(IncompatibleGridsError):
            product_state(wp1, wp2)
