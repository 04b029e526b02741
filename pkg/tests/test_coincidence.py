import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import DegenerateStateError
from src.spectral.state import (
    TwoPhotonState,
    apply_path_phase,
    build_spdc_spectrum,
    gaussian_wavepacket,
    product_state,
)
from src.spectral.symmetry import exchange_decompose
from src.splitter.beam_splitter import BALANCED, BeamSplitterParams
from src.splitter.coincidence import (
    coincidence_probability,
    coincidence_probability_formula,
    interference_term,
    predicted_coincidence,
    product_state_cp,
    wavepacket_overlap,
)
from src.splitter.transform import OutputState, transform

seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestCoincidenceProbability:
    def test_hom_dip_at_balance(self, default_grid):
        state = build_spdc_spectrum(default_grid, 1.0)
        assert coincidence_probability(transform(state, BALANCED)) < 1e-12
        assert abs(coincidence_probability_formula(state)) < 1e-12

    def test_singlet_always_coincides(self, singlet, medium_grid):
        state = singlet(medium_grid)
        assert math.isclose(coincidence_probability(transform(state, BALANCED)), 1.0, rel_tol=1e-12)
        assert math.isclose(coincidence_probability_formula(state), 1.0, rel_tol=1e-12)

    def test_zero_output(self, small_grid):
        with pytest.raises(DegenerateStateError):
            coincidence_probability(OutputState(grid=small_grid, input_norm=0.0))

    def test_zero_state_formula(self, small_grid):
        with pytest.raises(DegenerateStateError):
            interference_term(TwoPhotonState(grid=small_grid))

    @given(seed=seeds)
    @settings(max_examples=200, deadline=None)
    def test_formula_matches_split_state(self, random_state, small_grid, seed):
        state = random_state(small_grid, seed)
        p_state = coincidence_probability(transform(state, BALANCED))
        assert abs(p_state - coincidence_probability_formula(state)) < 1e-9
        assert 0.0 <= p_state <= 1.0 + 1e-12

    @given(seed=seeds, phi_tau=st.floats(-3.0, 3.0), phi_rho=st.floats(-3.0, 3.0))
    @settings(max_examples=50, deadline=None)
    def test_balanced_phases_do_not_matter(self, random_state, small_grid, seed, phi_tau, phi_rho):
        state = random_state(small_grid, seed)
        p_plain = coincidence_probability(transform(state, BALANCED))
        p_phased = coincidence_probability(transform(state, BeamSplitterParams(math.pi / 4, phi_tau, phi_rho)))
        assert abs(p_plain - p_phased) < 1e-12


class TestExchangeSymmetryOutcomes:
    @given(seed=seeds)
    @settings(max_examples=100, deadline=None)
    def test_symmetric_part_coalesces(self, random_state, small_grid, seed):
        symmetric, _ = exchange_decompose(random_state(small_grid, seed))
        p_c = coincidence_probability(transform(symmetric.normalized(), BALANCED))
        assert p_c <= 0.5
        assert p_c < 1e-10

    @given(seed=seeds)
    @settings(max_examples=100, deadline=None)
    def test_antisymmetric_part_anti_coalesces(self, random_state, small_grid, seed):
        _, antisymmetric = exchange_decompose(random_state(small_grid, seed))
        p_c = coincidence_probability(transform(antisymmetric.normalized(), BALANCED))
        assert abs(p_c - 1.0) < 1e-10


class TestSeparableBound:
    def test_identical_photons(self, medium_grid):
        wp = gaussian_wavepacket(medium_grid, width=0.9, h=1.0, v=0.4j)
        assert abs(wavepacket_overlap(wp, wp) - 1.0) < 1e-12
        assert abs(product_state_cp(wp, wp)) < 1e-12

    def test_orthogonal_polarizations(self, medium_grid):
        wp1 = gaussian_wavepacket(medium_grid, h=1.0, v=1.0)
        wp2 = gaussian_wavepacket(medium_grid, h=1.0, v=-1.0)
        assert math.isclose(product_state_cp(wp1, wp2), 0.5, rel_tol=1e-12)

    @given(
        width1=st.floats(0.5, 2.0), width2=st.floats(0.5, 2.0),
        center1=st.floats(-1.0, 1.0), center2=st.floats(-1.0, 1.0),
        delay1=st.floats(-3.0, 3.0), delay2=st.floats(-3.0, 3.0),
        mix1=st.floats(0.0, math.pi / 2), mix2=st.floats(0.0, math.pi / 2),
        phase1=st.floats(-math.pi, math.pi), phase2=st.floats(-math.pi, math.pi),
    )
    @settings(max_examples=200, deadline=None)
    def test_random_gaussian_pairs(self, medium_grid, width1, width2, center1, center2,
                                   delay1, delay2, mix1, mix2, phase1, phase2):
        wp1 = gaussian_wavepacket(medium_grid, width1, center1, delay1,
                                  h=math.cos(mix1), v=math.sin(mix1) * np.exp(1j * phase1))
        wp2 = gaussian_wavepacket(medium_grid, width2, center2, delay2,
                                  h=math.cos(mix2), v=math.sin(mix2) * np.exp(1j * phase2))
        from_overlap = product_state_cp(wp1, wp2)
        from_pipeline = coincidence_probability(transform(product_state(wp1, wp2), BALANCED))
        assert from_overlap <= 0.5 + 1e-12
        assert from_pipeline <= 0.5 + 1e-12
        assert abs(from_overlap - from_pipeline) < 1e-9

    @given(seed=seeds)
    @settings(max_examples=100, deadline=None)
    def test_random_photons(self, random_wavepacket, small_grid, seed):
        wp1 = random_wavepacket(small_grid, seed)
        wp2 = random_wavepacket(small_grid, seed + 1)
        from_pipeline = coincidence_probability(transform(product_state(wp1, wp2), BALANCED))
        assert from_pipeline <= 0.5 + 1e-12
        assert abs(product_state_cp(wp1, wp2) - from_pipeline) < 1e-9


class TestPredictedCoincidence:
    def test_balanced_gives_formula(self, medium_grid):
        state = apply_path_phase(build_spdc_spectrum(medium_grid, 1.0), -0.5, 0.5)
        prediction = predicted_coincidence(state, BALANCED)
        assert prediction.from_formula is not None
        assert abs(prediction.from_state - prediction.from_formula) < 1e-9
        assert math.isclose(prediction.from_state + prediction.same_port, 1.0, rel_tol=1e-12)

    def test_unbalanced_has_no_formula(self, singlet, medium_grid):
        prediction = predicted_coincidence(singlet(medium_grid), BeamSplitterParams(theta=0.3))
        assert prediction.from_formula is None
        assert 0.0 <= prediction.from_state <= 1.0
