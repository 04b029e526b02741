"""
Closed-form coincidence probabilities for the reference experiments.

All lengths are in units of c/sigma. These are the analytic oracles the
numeric pipelines are checked against.
"""
import math

from src.errors import DegenerateNormalizationError, InvalidArgumentError


# Normalization B below this counts as an annihilated state.
DEGENERATE_B = 1e-12


def hom_dip_closed_form(dz: float) -> float:
    """Dip of a symmetric spectrum: P_c = 1/2 [1 - exp(-dz^2 / 2)], independent of g."""
    return 0.5 * (1.0 - math.exp(-0.5 * dz ** 2))


def _beta_ratios(beta: float):
    """(beta^2 / (2 + beta^2), (1 + beta^2) / (2 + beta^2)), both -> 1 as beta -> inf."""
    if math.isinf(beta):
        return 1.0, 1.0
    b2 = beta ** 2
    return b2 / (2.0 + b2), (1.0 + b2) / (2.0 + b2)


def interferometer_normalization(delta_L: float, alpha: float, beta: float) -> float:
    """B = 1/2 [1 + cos(2 alpha) exp(-(1 + beta^2)/(2 + beta^2) delta_L^2)]."""
    _, norm_ratio = _beta_ratios(beta)
    return 0.5 * (1.0 + math.cos(2.0 * alpha) * math.exp(-norm_ratio * delta_L ** 2))


def eq18_closed_form(dz: float, delta_L: float, alpha: float, beta: float) -> float:
    """
    Coincidence probability behind an unbalanced interferometer in beam 1.

    Args:
        dz: Path difference z2 - z1
        delta_L: Half arm-length difference of the interferometer
        alpha: Carrier phase of the interferometer, radians
        beta: Pump-to-photon bandwidth ratio (0 allowed, inf for independent photons)

    Returns:
        P_c in [0, 1]
    """
    if math.isnan(beta) or beta < 0:
        raise InvalidArgumentError(f"beta must be >= 0, got {beta}")

    b = interferometer_normalization(delta_L, alpha, beta)
    if b < DEGENERATE_B:
        raise DegenerateNormalizationError(
            f"normalization B={b:.3g} vanishes (delta_L={delta_L}, alpha={alpha})"
        )

    pump_ratio, _ = _beta_ratios(beta)
    central = math.cos(2.0 * alpha) * math.exp(-0.5 * (pump_ratio * delta_L ** 2 + dz ** 2))
    side_plus = 0.5 * math.exp(-0.5 * (delta_L + dz) ** 2)
    side_minus = 0.5 * math.exp(-0.5 * (delta_L - dz) ** 2)
    return 0.5 * (1.0 - (central + side_plus + side_minus) / (2.0 * b))


def eq21_closed_form(dz: float, alpha: float) -> float:
    """Independent photons, wave-plate phase alpha on V in beam 1."""
    return 0.5 * (1.0 - 0.5 * (1.0 + math.cos(alpha)) * math.exp(-0.5 * dz ** 2))


def eq29_closed_form(dz: float, alpha: float) -> float:
    """Polarization-entangled pair HV + e^{i alpha} VH, independent of g."""
    return 0.5 * (1.0 - math.cos(alpha) * math.exp(-0.5 * dz ** 2))
