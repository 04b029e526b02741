"""
Coincidence probability: from the split state and from closed forms.

`coincidence_probability` reads the coincidence sectors of an OutputState.
`coincidence_probability_formula` evaluates the 50/50 interference formula
directly on the input spectrum,

    P_c = 1/2 {1 - 1/2 sum w w [2 C_HV C*_VH(swap) + sum_p C_pp C*_pp(swap) + c.c.]},

and `product_state_cp` the overlap formula for two independent photons,
P_c = 1/2 [1 - |<wp2|wp1>|^2] <= 1/2. The formula paths only hold for a
balanced splitter; callers must not compare them against other mixing angles.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.errors import DegenerateStateError
from src.spectral.state import (
    Polarization,
    PolarizationChannel,
    SinglePhotonWavepacket,
    TwoPhotonState,
)
from src.splitter.beam_splitter import BeamSplitterParams
from src.splitter.transform import OutputState, transform


def coincidence_probability(output: OutputState) -> float:
    """Probability of one photon in each exit port."""
    if not output.input_norm > 0:
        raise DegenerateStateError("coincidence probability of a zero state")
    return output.coincidence_norm() / output.input_norm


def interference_term(state: TwoPhotonState) -> float:
    """
    Exchange-overlap term of the balanced-splitter formula, relative to the norm.

    Equals 1 for exchange-symmetric spectra, -1 for antisymmetric ones and 0
    when the two photons are distinguishable.
    """
    pair_weight = state.grid.pair_weight()
    hv = state.matrix(PolarizationChannel.HV)
    vh = state.matrix(PolarizationChannel.VH)
    overlap = 2.0 * np.sum(pair_weight * hv * np.conj(vh.T))
    for channel in (PolarizationChannel.HH, PolarizationChannel.VV):
        c = state.matrix(channel)
        overlap = overlap + np.sum(pair_weight * c * np.conj(c.T))

    norm_sq = state.norm_squared()
    if not norm_sq > 0:
        raise DegenerateStateError("interference term of a zero state")
    # X + c.c. = 2 Re X, then the leading 1/2
    return float(overlap.real) / norm_sq


def coincidence_probability_formula(state: TwoPhotonState) -> float:
    """Balanced-splitter coincidence probability straight from the input spectrum."""
    return 0.5 * (1.0 - interference_term(state))


def wavepacket_overlap(wp1: SinglePhotonWavepacket, wp2: SinglePhotonWavepacket) -> complex:
    """Normalized overlap integral sum_p int C_1p C*_2p."""
    weight = wp1.grid.weight
    overlap = sum(
        np.sum(weight * wp1.amplitude(pol) * np.conj(wp2.amplitude(pol)))
        for pol in Polarization
    )
    norm = np.sqrt(wp1.norm_squared() * wp2.norm_squared())
    if not norm > 0:
        raise DegenerateStateError("overlap with an empty wavepacket")
    return complex(overlap / norm)


def product_state_cp(wp1: SinglePhotonWavepacket, wp2: SinglePhotonWavepacket) -> float:
    """Coincidence probability of two independent photons at a 50/50 splitter."""
    return 0.5 * (1.0 - abs(wavepacket_overlap(wp1, wp2)) ** 2)


@dataclass(frozen=True)
class CoincidencePrediction:
    """Coincidence probability from the split state, with the formula cross-check."""
    from_state: float
    from_formula: Optional[float]
    same_port: float


def predicted_coincidence(state: TwoPhotonState, params: BeamSplitterParams) -> CoincidencePrediction:
    """Split the state and report P_c; the formula value is only given for 50/50."""
    output = transform(state, params)
    return CoincidencePrediction(
        from_state=coincidence_probability(output),
        from_formula=coincidence_probability_formula(state) if params.is_balanced else None,
        same_port=output.same_port_probability(),
    )
