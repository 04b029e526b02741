"""Shared fixtures: grids, random states and the sample data directory."""
import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from src.spectral.grid import make_grid
from src.spectral.state import (
    CHANNEL_ORDER,
    Polarization,
    PolarizationChannel,
    SinglePhotonWavepacket,
    TwoPhotonState,
    gaussian_profile,
    polarization_pair_state,
)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return ROOT / "data"


@pytest.fixture(scope="session")
def small_grid():
    return make_grid(3.0, 9)


@pytest.fixture(scope="session")
def medium_grid():
    return make_grid(6.0, 65)


@pytest.fixture(scope="session")
def default_grid():
    return make_grid()


@pytest.fixture(scope="session")
def random_state():
    """Factory: normalized state with complex Gaussian entries in the given channels."""
    def build(grid, seed, channels=CHANNEL_ORDER):
        rng = np.random.default_rng(seed)
        n = grid.n_points
        matrices = {
            channel: rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            for channel in channels
        }
        return TwoPhotonState.from_matrices(grid, matrices).normalized()
    return build


@pytest.fixture(scope="session")
def random_wavepacket():
    """Factory: normalized single photon with random complex amplitudes."""
    def build(grid, seed):
        rng = np.random.default_rng(seed)
        n = grid.n_points
        amps = {pol: rng.normal(size=n) + 1j * rng.normal(size=n) for pol in Polarization}
        return SinglePhotonWavepacket(grid=grid, amps=amps).normalized()
    return build


@pytest.fixture(scope="session")
def singlet():
    """Factory: polarization singlet (HV - VH)/sqrt(2) with a Gaussian spectrum."""
    def build(grid):
        f = gaussian_profile(grid)
        return polarization_pair_state(grid, np.outer(f, f), {
            PolarizationChannel.HV: 1.0,
            PolarizationChannel.VH: -1.0,
        })
    return build
