"""
Beam-splitter transform of two-photon states.

Each input term C_pq(nu1, nu2) a1p_dag(nu1) a2q_dag(nu2) is expanded by
substituting both creation operators (`creation_substitution`). The four
products are collected into sectors keyed by polarization channel and exit
port pair, in a canonical operator order:

- photons in different ports are always stored as Coinc12, port-1 photon on
  the row axis; terms produced as a2_dag(nu1) a1_dag(nu2) are folded in by
  transposing the frequency matrix and swapping the polarizations;
- photons in the same port with different polarizations are stored under
  HV, H photon on the row axis;
- photons in the same port with the same polarization are stored as
  produced; only (A + A^T)/2 is physical there.

Coinc21 therefore never carries amplitude after canonicalization.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Tuple

import numpy as np

from src.spectral.grid import FrequencyGrid
from src.spectral.state import (
    CHANNEL_ORDER,
    JointAmplitude,
    Polarization,
    PolarizationChannel,
    TwoPhotonState,
)
from src.splitter.beam_splitter import BeamSplitterParams, creation_substitution

logger = logging.getLogger(__name__)


class PortPair(Enum):
    """Exit ports of (row-detuning photon, column-detuning photon)."""
    BOTH1 = "Both1"
    BOTH2 = "Both2"
    COINC12 = "Coinc12"
    COINC21 = "Coinc21"

    @property
    def ports(self) -> Tuple[int, int]:
        return _PORTS[self]

    @property
    def is_coincidence(self) -> bool:
        return self in (PortPair.COINC12, PortPair.COINC21)


_PORTS = {
    PortPair.BOTH1: (0, 0),
    PortPair.BOTH2: (1, 1),
    PortPair.COINC12: (0, 1),
    PortPair.COINC21: (1, 0),
}

PORT_ORDER = (PortPair.BOTH1, PortPair.BOTH2, PortPair.COINC12, PortPair.COINC21)

Sector = Tuple[PolarizationChannel, PortPair]


def _is_bunched_same_polarization(sector: Sector) -> bool:
    channel, ports = sector
    return not ports.is_coincidence and channel.first == channel.second


@dataclass(frozen=True, eq=False)
class OutputState:
    """Two-photon state after a splitter, partitioned into exit-port sectors."""
    grid: FrequencyGrid
    sectors: Dict[Sector, JointAmplitude] = field(default_factory=dict)
    input_norm: float = 1.0  # squared norm of the state that was split

    def matrix(self, sector: Sector) -> np.ndarray:
        """Stored amplitude of a sector; absent sectors read as zeros."""
        amplitude = self.sectors.get(sector)
        if amplitude is None:
            n = self.grid.n_points
            return np.zeros((n, n), dtype=complex)
        return amplitude.matrix

    def bosonic_amplitude(self, sector: Sector) -> np.ndarray:
        """Physical part of a sector's amplitude (symmetrized for identical bosons)."""
        m = self.matrix(sector)
        if _is_bunched_same_polarization(sector):
            return (m + m.T) / 2
        return m

    def present_sectors(self) -> Tuple[Sector, ...]:
        return tuple(self.sectors)

    def total_norm(self) -> float:
        return float(sum(sector_norm(self, sector) for sector in self.sectors))

    def coincidence_norm(self) -> float:
        return float(sum(
            sector_norm(self, sector) for sector in self.sectors if sector[1].is_coincidence
        ))

    def same_port_probability(self) -> float:
        """Probability that both photons leave through the same port."""
        return float(sum(
            sector_norm(self, sector) for sector in self.sectors if not sector[1].is_coincidence
        )) / self.input_norm


def sector_norm(output: OutputState, sector: Sector) -> float:
    """
    Bosonic squared norm of one sector.

    Photons in distinguishable modes: sum w_i w_j |A_ij|^2.
    Two photons of one polarization in one port: the operator product is
    symmetric, so the norm is sum w_i w_j (|A_ij|^2 + A_ij conj(A_ji)).
    """
    if sector not in output.sectors:
        return 0.0
    a = output.matrix(sector)
    pair_weight = output.grid.pair_weight()
    plain = pair_weight * np.abs(a) ** 2
    if _is_bunched_same_polarization(sector):
        return float(np.sum(plain + pair_weight * (a * np.conj(a.T)).real))
    return float(np.sum(plain))


# (row port, column port, row polarization, column polarization, amplitude)
_Term = Tuple[int, int, Polarization, Polarization, np.ndarray]


def _canonical(row_port: int, col_port: int, row_pol: Polarization, col_pol: Polarization,
               amplitude: np.ndarray) -> Tuple[Sector, np.ndarray]:
    if row_port != col_port:
        if row_port == 0:
            return (PolarizationChannel.of(row_pol, col_pol), PortPair.COINC12), amplitude
        return (PolarizationChannel.of(col_pol, row_pol), PortPair.COINC12), amplitude.T

    ports = PortPair.BOTH1 if row_port == 0 else PortPair.BOTH2
    if row_pol == Polarization.V and col_pol == Polarization.H:
        return (PolarizationChannel.HV, ports), amplitude.T
    return (PolarizationChannel.of(row_pol, col_pol), ports), amplitude


def _expand(terms: Iterator[_Term], grid: FrequencyGrid,
            params: BeamSplitterParams) -> Dict[Sector, np.ndarray]:
    u = creation_substitution(params).matrix()
    accumulated: Dict[Sector, np.ndarray] = {}
    for row_port, col_port, row_pol, col_pol, amplitude in terms:
        for out_row in (0, 1):
            for out_col in (0, 1):
                coeff = u[row_port, out_row] * u[col_port, out_col]
                if coeff == 0:
                    continue
                sector, matrix = _canonical(out_row, out_col, row_pol, col_pol, amplitude)
                contribution = coeff * matrix
                if sector in accumulated:
                    accumulated[sector] = accumulated[sector] + contribution
                else:
                    accumulated[sector] = contribution
    return accumulated


def _assemble(grid: FrequencyGrid, accumulated: Dict[Sector, np.ndarray],
              input_norm: float) -> OutputState:
    sectors = {}
    for channel in CHANNEL_ORDER:
        for ports in PORT_ORDER:
            matrix = accumulated.get((channel, ports))
            if matrix is not None:
                sectors[(channel, ports)] = JointAmplitude(grid=grid, matrix=matrix)
    return OutputState(grid=grid, sectors=sectors, input_norm=input_norm)


def transform(state: TwoPhotonState, params: BeamSplitterParams) -> OutputState:
    """
    Send a two-photon state through a lossless splitter.

    Args:
        state: Input state (photon 1 in port 1, photon 2 in port 2)
        params: Splitter parameters

    Returns:
        OutputState whose total bosonic norm equals the input norm
    """
    terms = (
        (0, 1, channel.first, channel.second, state.matrix(channel))
        for channel in state.present_channels()
    )
    accumulated = _expand(terms, state.grid, params)
    output = _assemble(state.grid, accumulated, state.norm_squared())
    logger.debug("transform theta=%.6g: %d sectors", params.theta, len(output.sectors))
    return output


def propagate(output: OutputState, params: BeamSplitterParams) -> OutputState:
    """Send an already split state through a further splitter (cascaded splitters)."""
    terms = (
        (ports.ports[0], ports.ports[1], channel.first, channel.second, output.matrix((channel, ports)))
        for channel, ports in output.present_sectors()
    )
    accumulated = _expand(terms, output.grid, params)
    return _assemble(output.grid, accumulated, output.total_norm())
