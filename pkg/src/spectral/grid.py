"""
Frequency grid for discretized two-photon spectra.

Detunings are measured from the carrier, nu = omega - Omega, in units of the
single-photon bandwidth sigma. Every amplitude in the package lives on one of
these grids.
"""
from dataclasses import dataclass, field

import numpy as np

from src.errors import InvalidArgumentError


DEFAULT_HALF_WIDTH = 6.0
DEFAULT_N_POINTS = 257


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Uniform, zero-centred detuning grid with trapezoid weights."""
    half_width: float
    n_points: int
    values: np.ndarray = field(repr=False)
    weight: np.ndarray = field(repr=False)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.n_points - 1)

    @property
    def sqrt_weight(self) -> np.ndarray:
        return np.sqrt(self.weight)

    def __len__(self) -> int:
        return self.n_points

    def same_as(self, other: "FrequencyGrid") -> bool:
        """Grids are interchangeable when extent and resolution match."""
        if other is self:
            return True
        return self.n_points == other.n_points and self.half_width == other.half_width

    def pair_weight(self) -> np.ndarray:
        """Outer product w_i * w_j used by every two-photon quadrature."""
        return np.outer(self.weight, self.weight)


def make_grid(half_width: float = DEFAULT_HALF_WIDTH,
              n_points: int = DEFAULT_N_POINTS) -> FrequencyGrid:
    """
    Build a symmetric detuning grid on [-half_width, +half_width].

    Args:
        half_width: Extent W in units of sigma (must be > 0)
        n_points: Number of grid points (must be >= 2)

    Returns:
        FrequencyGrid with trapezoid quadrature weights
    """
    if not np.isfinite(half_width) or half_width <= 0:
        raise InvalidArgumentError(f"half_width must be positive, got {half_width}")
    if int(n_points) != n_points or n_points < 2:
        raise InvalidArgumentError(f"n_points must be an integer >= 2, got {n_points}")
    n_points = int(n_points)
    half_width = float(half_width)

    step = 2.0 * half_width / (n_points - 1)
    # Offsets from the centre are exact (half-)integers, so nu_i == -nu_{n-1-i}.
    offsets = np.arange(n_points, dtype=float) - (n_points - 1) / 2.0
    values = np.clip(offsets * step, -half_width, half_width)

    weight = np.full(n_points, step)
    weight[0] *= 0.5
    weight[-1] *= 0.5

    values.flags.writeable = False
    weight.flags.writeable = False
    return FrequencyGrid(half_width=half_width, n_points=n_points, values=values, weight=weight)
