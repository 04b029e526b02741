"""
Schmidt analysis of two-photon states.

The state is flattened into a matrix whose rows enumerate (polarization,
detuning) of the port-1 photon and whose columns do the same for the port-2
photon; its singular values are the Schmidt coefficients.
"""
from dataclasses import dataclass
from typing import List

import numpy as np

from src.errors import DegenerateStateError
from src.spectral.state import CHANNEL_ORDER, Polarization, TwoPhotonState


ENTANGLEMENT_TOL = 1e-6

_POL_INDEX = {Polarization.H: 0, Polarization.V: 1}


@dataclass(frozen=True)
class SchmidtReport:
    """Schmidt coefficients and the derived Schmidt number K."""
    singular_values: List[float]
    schmidt_number: float
    entangled: bool

    @property
    def probabilities(self) -> List[float]:
        s = np.asarray(self.singular_values)
        return list(s ** 2 / np.sum(s ** 2))

    def to_dict(self) -> dict:
        return {
            "singular_values": self.singular_values,
            "schmidt_number": self.schmidt_number,
            "entangled": self.entangled,
        }


def bipartite_matrix(state: TwoPhotonState) -> np.ndarray:
    """M[(p, i), (q, j)] = sqrt(w_i w_j) C_pq(nu_i, nu_j)."""
    n = state.grid.n_points
    sqrt_w = state.grid.sqrt_weight
    scaled = np.outer(sqrt_w, sqrt_w)
    m = np.zeros((2 * n, 2 * n), dtype=complex)
    for channel in CHANNEL_ORDER:
        if channel not in state.channels:
            continue
        row = _POL_INDEX[channel.first] * n
        col = _POL_INDEX[channel.second] * n
        m[row:row + n, col:col + n] = scaled * state.matrix(channel)
    return m


def schmidt_analysis(state: TwoPhotonState, tol: float = ENTANGLEMENT_TOL) -> SchmidtReport:
    """
    Schmidt decomposition of a two-photon state.

    Args:
        state: Normalized two-photon state
        tol: Threshold on K - 1 above which the state counts as entangled

    Returns:
        SchmidtReport with singular values in non-increasing order
    """
    singular_values = np.linalg.svd(bipartite_matrix(state), compute_uv=False)
    total = float(np.sum(singular_values ** 2))
    if not total > 0:
        raise DegenerateStateError("Schmidt analysis of a zero state")

    p = singular_values ** 2 / total
    schmidt_number = float(1.0 / np.sum(p ** 2))
    return SchmidtReport(
        singular_values=[float(s) for s in singular_values],
        schmidt_number=schmidt_number,
        entangled=schmidt_number > 1.0 + tol,
    )
