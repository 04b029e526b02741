"""
Lossless beam-splitter parameters and mode transforms.

The splitter maps input annihilation operators a to output ones b = S a with

    S = [[ e^{i phi_tau} cos(theta),  e^{i phi_rho} sin(theta)],
         [-e^{-i phi_rho} sin(theta), e^{-i phi_tau} cos(theta)]].

States are propagated by substituting every input creation operator with its
conjugated image (see `creation_substitution`).
"""
import math
from dataclasses import dataclass

import numpy as np

from src.errors import InvalidArgumentError


@dataclass(frozen=True)
class BeamSplitterParams:
    """Mixing angle theta and the two free phases of a lossless splitter."""
    theta: float = math.pi / 4
    phi_tau: float = 0.0
    phi_rho: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi / 2:
            raise InvalidArgumentError(f"theta must lie in [0, pi/2], got {self.theta}")
        for name in ("phi_tau", "phi_rho"):
            value = getattr(self, name)
            if not -math.pi < value <= math.pi:
                raise InvalidArgumentError(f"{name} must lie in (-pi, pi], got {value}")

    @property
    def phi(self) -> float:
        """Total phase phi_tau + phi_rho picked up by same-port pairs."""
        return self.phi_tau + self.phi_rho

    @property
    def is_balanced(self) -> bool:
        return math.isclose(self.theta, math.pi / 4, rel_tol=0.0, abs_tol=1e-15)


BALANCED = BeamSplitterParams()


@dataclass(frozen=True)
class CreationCoefficients:
    """b1_dag = u11 a1_dag + u12 a2_dag,  b2_dag = u21 a1_dag + u22 a2_dag."""
    u11: complex
    u12: complex
    u21: complex
    u22: complex

    def matrix(self) -> np.ndarray:
        return np.array([[self.u11, self.u12], [self.u21, self.u22]], dtype=complex)


def bs_matrix(params: BeamSplitterParams) -> np.ndarray:
    """Annihilation-operator transform S of the splitter."""
    c, s = math.cos(params.theta), math.sin(params.theta)
    return np.array([
        [np.exp(1j * params.phi_tau) * c, np.exp(1j * params.phi_rho) * s],
        [-np.exp(-1j * params.phi_rho) * s, np.exp(-1j * params.phi_tau) * c],
    ], dtype=complex)


def creation_substitution(params: BeamSplitterParams) -> CreationCoefficients:
    """
    Image of each input creation operator in terms of output creation operators.

    For theta = pi/4 this reads
        b1_dag = (e^{i phi_tau} a1_dag - e^{-i phi_rho} a2_dag) / sqrt(2)
        b2_dag = (e^{i phi_rho} a1_dag + e^{-i phi_tau} a2_dag) / sqrt(2)
    """
    c, s = math.cos(params.theta), math.sin(params.theta)
    return CreationCoefficients(
        u11=complex(np.exp(1j * params.phi_tau) * c),
        u12=complex(-np.exp(-1j * params.phi_rho) * s),
        u21=complex(np.exp(1j * params.phi_rho) * s),
        u22=complex(np.exp(-1j * params.phi_tau) * c),
    )
