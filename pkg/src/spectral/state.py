"""
Two-photon and single-photon spectral states.

A two-photon state carries one joint amplitude C_pq(nu1, nu2) per polarization
channel, where p is the polarization of the photon entering port 1 and q the
one entering port 2. Rows of every matrix index the port-1 detuning, columns
the port-2 detuning. Absent channels are exactly zero.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Mapping, Tuple

import numpy as np

from src.errors import (
    DegenerateStateError,
    IncompatibleGridsError,
    InvalidArgumentError,
    UnsupportedParameterError,
)
from src.spectral.grid import FrequencyGrid

logger = logging.getLogger(__name__)


BETA_MIN = 0.02
# Relative norm^2 below which a filtered state counts as annihilated.
DEGENERATE_NORM = 1e-24


class Polarization(Enum):
    """Single-photon polarization modes."""
    H = "H"
    V = "V"


class PolarizationChannel(Enum):
    """Polarization pair (port-1 photon, port-2 photon)."""
    HH = "HH"
    VV = "VV"
    HV = "HV"
    VH = "VH"

    @property
    def first(self) -> Polarization:
        return Polarization(self.value[0])

    @property
    def second(self) -> Polarization:
        return Polarization(self.value[1])

    @property
    def swapped(self) -> "PolarizationChannel":
        """Channel seen after exchanging the two photons."""
        return PolarizationChannel(self.value[::-1])

    @classmethod
    def of(cls, first: Polarization, second: Polarization) -> "PolarizationChannel":
        return cls(first.value + second.value)


CHANNEL_ORDER: Tuple[PolarizationChannel, ...] = (
    PolarizationChannel.HH,
    PolarizationChannel.VV,
    PolarizationChannel.HV,
    PolarizationChannel.VH,
)


def _frozen_complex(matrix, shape: Tuple[int, ...], what: str) -> np.ndarray:
    array = np.array(matrix, dtype=complex)
    if array.shape != shape:
        raise InvalidArgumentError(f"{what} has shape {array.shape}, expected {shape}")
    if not np.all(np.isfinite(array)):
        raise InvalidArgumentError(f"{what} contains non-finite entries")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class JointAmplitude:
    """Joint spectral amplitude of one polarization channel on a grid."""
    grid: FrequencyGrid
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = self.grid.n_points
        object.__setattr__(self, "matrix", _frozen_complex(self.matrix, (n, n), "joint amplitude"))

    def norm_squared(self) -> float:
        """Quadrature norm sum_ij w_i w_j |C_ij|^2."""
        return float(np.sum(self.grid.pair_weight() * np.abs(self.matrix) ** 2))


@dataclass(frozen=True, eq=False)
class TwoPhotonState:
    """Four-channel two-photon wavepacket; all channels share one grid."""
    grid: FrequencyGrid
    channels: Dict[PolarizationChannel, JointAmplitude] = field(default_factory=dict)

    def __post_init__(self):
        ordered = {}
        for channel in CHANNEL_ORDER:
            amplitude = self.channels.get(channel)
            if amplitude is None:
                continue
            if not amplitude.grid.same_as(self.grid):
                raise IncompatibleGridsError(
                    f"channel {channel.value} lives on a different grid than the state"
                )
            ordered[channel] = amplitude
        object.__setattr__(self, "channels", ordered)

    @classmethod
    def from_matrices(cls, grid: FrequencyGrid,
                      matrices: Mapping[PolarizationChannel, np.ndarray]) -> "TwoPhotonState":
        """Build a state from raw channel matrices."""
        return cls(grid=grid, channels={
            channel: JointAmplitude(grid=grid, matrix=matrix)
            for channel, matrix in matrices.items()
        })

    def matrix(self, channel: PolarizationChannel) -> np.ndarray:
        """Channel matrix; absent channels read as zeros."""
        amplitude = self.channels.get(channel)
        if amplitude is None:
            n = self.grid.n_points
            return np.zeros((n, n), dtype=complex)
        return amplitude.matrix

    def present_channels(self) -> Tuple[PolarizationChannel, ...]:
        return tuple(self.channels)

    def channel_norms(self) -> Dict[PolarizationChannel, float]:
        return {channel: amp.norm_squared() for channel, amp in self.channels.items()}

    def norm_squared(self) -> float:
        return float(sum(self.channel_norms().values()))

    def map_channels(self, fn: Callable[[np.ndarray], np.ndarray]) -> "TwoPhotonState":
        """Apply the same elementwise operation to every present channel."""
        return TwoPhotonState.from_matrices(
            self.grid, {channel: fn(amp.matrix) for channel, amp in self.channels.items()}
        )

    def scaled(self, factor: complex) -> "TwoPhotonState":
        return self.map_channels(lambda m: m * factor)

    def normalized(self) -> "TwoPhotonState":
        """Rescale to unit total norm."""
        norm_sq = self.norm_squared()
        if not norm_sq > 0:
            raise DegenerateStateError("cannot normalize a state with zero norm")
        return self.scaled(1.0 / np.sqrt(norm_sq))


@dataclass(frozen=True, eq=False)
class SinglePhotonWavepacket:
    """One photon in one beam: amplitude per polarization over the grid."""
    grid: FrequencyGrid
    amps: Dict[Polarization, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        n = self.grid.n_points
        frozen = {}
        for pol in Polarization:
            if pol in self.amps:
                frozen[pol] = _frozen_complex(self.amps[pol], (n,), f"{pol.value} amplitude")
        object.__setattr__(self, "amps", frozen)

    def amplitude(self, pol: Polarization) -> np.ndarray:
        vector = self.amps.get(pol)
        if vector is None:
            return np.zeros(self.grid.n_points, dtype=complex)
        return vector

    def norm_squared(self) -> float:
        return float(sum(np.sum(self.grid.weight * np.abs(v) ** 2) for v in self.amps.values()))

    def normalized(self) -> "SinglePhotonWavepacket":
        norm_sq = self.norm_squared()
        if not norm_sq > 0:
            raise DegenerateStateError("cannot normalize an empty wavepacket")
        scale = 1.0 / np.sqrt(norm_sq)
        return SinglePhotonWavepacket(
            grid=self.grid, amps={pol: v * scale for pol, v in self.amps.items()}
        )


def gaussian_profile(grid: FrequencyGrid, width: float = 1.0, center: float = 0.0) -> np.ndarray:
    """Single-photon spectral profile f(nu) = exp[-(nu - center)^2 / (2 width^2)]."""
    if width <= 0:
        raise InvalidArgumentError(f"width must be positive, got {width}")
    return np.exp(-((grid.values - center) ** 2) / (2.0 * width ** 2))


def gaussian_wavepacket(grid: FrequencyGrid,
                        width: float = 1.0,
                        center: float = 0.0,
                        delay: float = 0.0,
                        h: complex = 1.0,
                        v: complex = 0.0) -> SinglePhotonWavepacket:
    """
    Gaussian single-photon wavepacket in the polarization state h|H> + v|V>.

    Args:
        grid: Detuning grid
        width: Spectral width in units of sigma
        center: Detuning offset of the spectrum
        delay: Path length in units of c/sigma (adds exp(i nu delay))
        h, v: Polarization coefficients (zero drops that component)

    Returns:
        Normalized SinglePhotonWavepacket
    """
    profile = gaussian_profile(grid, width, center) * np.exp(1j * grid.values * delay)
    amps = {}
    if h != 0:
        amps[Polarization.H] = h * profile
    if v != 0:
        amps[Polarization.V] = v * profile
    return SinglePhotonWavepacket(grid=grid, amps=amps).normalized()


def build_spdc_spectrum(grid: FrequencyGrid, beta: float) -> TwoPhotonState:
    """
    Symmetric down-conversion spectrum g(nu1 + nu2) f(nu1) f(nu2) in channel HH.

    g(x) = exp[-x^2 / (2 beta^2)] with beta = sigma_p / sigma; beta = inf selects
    g = 1, i.e. two independent photons.

    Args:
        grid: Detuning grid
        beta: Pump-to-photon bandwidth ratio (>= BETA_MIN, or +inf)

    Returns:
        Normalized single-channel TwoPhotonState
    """
    f = gaussian_profile(grid)
    product = np.outer(f, f)
    if np.isposinf(beta):
        matrix = product
    else:
        if not (beta >= BETA_MIN):
            raise UnsupportedParameterError(
                f"beta={beta} is below the resolvable minimum {BETA_MIN} "
                f"(use inf for independent photons)"
            )
        total = np.add.outer(grid.values, grid.values)
        matrix = np.exp(-total ** 2 / (2.0 * beta ** 2)) * product
    state = TwoPhotonState.from_matrices(grid, {PolarizationChannel.HH: matrix})
    return state.normalized()


def path_phase(grid: FrequencyGrid, z1: float, z2: float) -> np.ndarray:
    """Phase matrix exp[i(nu1 z1 + nu2 z2)]; the carrier phase is dropped."""
    return np.outer(np.exp(1j * z1 * grid.values), np.exp(1j * z2 * grid.values))


def apply_path_phase(state: TwoPhotonState, z1: float, z2: float) -> TwoPhotonState:
    """Propagate beam 1 over z1 and beam 2 over z2 (units of c/sigma)."""
    if z1 == 0 and z2 == 0:
        return state
    phase = path_phase(state.grid, z1, z2)
    return state.map_channels(lambda m: m * phase)


def apply_interferometer(state: TwoPhotonState, delta_L: float, alpha: float) -> TwoPhotonState:
    """
    Send beam 1 through an unbalanced two-arm interferometer.

    Multiplies every channel by cos(nu1 * delta_L + alpha) and renormalizes.

    Args:
        state: Input state
        delta_L: Half arm-length difference in units of c/sigma
        alpha: Carrier phase Omega * delta_L / c, in radians

    Returns:
        Normalized filtered state
    """
    factor = np.cos(state.grid.values * delta_L + alpha)[:, np.newaxis]
    filtered = state.map_channels(lambda m: m * factor)

    before = state.norm_squared()
    after = filtered.norm_squared()
    if not after > DEGENERATE_NORM * before:
        raise DegenerateStateError(
            f"interferometer (delta_L={delta_L}, alpha={alpha}) annihilates the state"
        )
    logger.debug("interferometer transmission %.6g", after / before)
    return filtered.normalized()


def product_state(wp1: SinglePhotonWavepacket, wp2: SinglePhotonWavepacket) -> TwoPhotonState:
    """Two independent photons: C_pq(nu1, nu2) = C_1p(nu1) C_2q(nu2)."""
    if not wp1.grid.same_as(wp2.grid):
        raise IncompatibleGridsError("wavepackets live on different grids")
    matrices = {}
    for channel in CHANNEL_ORDER:
        a = wp1.amps.get(channel.first)
        b = wp2.amps.get(channel.second)
        if a is not None and b is not None:
            matrices[channel] = np.outer(a, b)
    return TwoPhotonState.from_matrices(wp1.grid, matrices).normalized()


def polarization_pair_state(grid: FrequencyGrid,
                            spectrum: np.ndarray,
                            coefficients: Mapping[PolarizationChannel, complex]) -> TwoPhotonState:
    """Share one spectral factor across channels with the given coefficients."""
    matrices = {
        channel: coeff * spectrum
        for channel, coeff in coefficients.items()
        if coeff != 0
    }
    return TwoPhotonState.from_matrices(grid, matrices).normalized()
