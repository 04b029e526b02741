"""
Exchange symmetry of two-photon spectra.

The exchange operator swaps both photons' frequencies and polarizations:
(XC)_pq(nu1, nu2) = C_qp(nu2, nu1). Symmetric spectra coalesce at a 50/50
splitter, antisymmetric spectra pass it unchanged.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from src.errors import DegenerateStateError
from src.spectral.state import CHANNEL_ORDER, TwoPhotonState


SYMMETRY_TOL = 1e-6


class SymmetryClass(Enum):
    """Exchange-symmetry verdict for a state."""
    SYMMETRIC = "Symmetric"
    ANTISYMMETRIC = "Antisymmetric"
    MIXED = "Mixed"


@dataclass(frozen=True)
class SymmetryWeights:
    """Norm^2 of the two exchange parts relative to the state norm^2."""
    symmetric: float
    antisymmetric: float


def exchange(state: TwoPhotonState) -> TwoPhotonState:
    """Apply the exchange operator X."""
    matrices = {}
    for channel in CHANNEL_ORDER:
        partner = channel.swapped
        if channel in state.channels or partner in state.channels:
            matrices[channel] = state.matrix(partner).T
    return TwoPhotonState.from_matrices(state.grid, matrices)


def exchange_decompose(state: TwoPhotonState) -> Tuple[TwoPhotonState, TwoPhotonState]:
    """
    Split a state into exchange-symmetric and antisymmetric parts.

    Returns:
        (symmetric, antisymmetric) with symmetric + antisymmetric == state
    """
    swapped = exchange(state)
    symmetric = {}
    antisymmetric = {}
    for channel in swapped.present_channels():
        c = state.matrix(channel)
        xc = swapped.matrix(channel)
        symmetric[channel] = (c + xc) / 2
        antisymmetric[channel] = (c - xc) / 2
    return (
        TwoPhotonState.from_matrices(state.grid, symmetric),
        TwoPhotonState.from_matrices(state.grid, antisymmetric),
    )


def symmetry_weights(state: TwoPhotonState) -> SymmetryWeights:
    symmetric, antisymmetric = exchange_decompose(state)
    total = state.norm_squared()
    if not total > 0:
        raise DegenerateStateError("symmetry of a zero state is undefined")
    return SymmetryWeights(
        symmetric=symmetric.norm_squared() / total,
        antisymmetric=antisymmetric.norm_squared() / total,
    )


def classify_symmetry(state: TwoPhotonState, tol: float = SYMMETRY_TOL) -> SymmetryClass:
    """Symmetric / Antisymmetric when the opposite part's relative norm^2 is below tol."""
    weights = symmetry_weights(state)
    if weights.antisymmetric < tol:
        return SymmetryClass.SYMMETRIC
    if weights.symmetric < tol:
        return SymmetryClass.ANTISYMMETRIC
    return SymmetryClass.MIXED
