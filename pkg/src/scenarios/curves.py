"""
Reference two-photon interference experiments as coincidence curves.

Each scenario builds its source state once, then for every path difference
dz = z2 - z1 places the photons at (z1, z2) = (-dz/2, +dz/2), splits them at
a 50/50 splitter and reads the coincidence probability. The analytic column
comes from `closed_forms`.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.errors import InvalidArgumentError
from src.scenarios.closed_forms import (
    eq18_closed_form,
    eq21_closed_form,
    eq29_closed_form,
    hom_dip_closed_form,
)
from src.spectral.grid import DEFAULT_HALF_WIDTH, DEFAULT_N_POINTS, FrequencyGrid, make_grid
from src.spectral.state import (
    BETA_MIN,
    PolarizationChannel,
    TwoPhotonState,
    apply_interferometer,
    apply_path_phase,
    build_spdc_spectrum,
    gaussian_wavepacket,
    polarization_pair_state,
    product_state,
)
from src.splitter.beam_splitter import BALANCED
from src.splitter.coincidence import coincidence_probability
from src.splitter.transform import transform

logger = logging.getLogger(__name__)


class CurveMode(Enum):
    """Which columns of a curve to compute."""
    NUMERIC = "numeric"
    ANALYTIC = "analytic"
    BOTH = "both"

    @property
    def numeric(self) -> bool:
        return self in (CurveMode.NUMERIC, CurveMode.BOTH)

    @property
    def analytic(self) -> bool:
        return self in (CurveMode.ANALYTIC, CurveMode.BOTH)


@dataclass(frozen=True)
class CurveSpec:
    """Sweep of the path difference plus the scenario parameters."""
    dz_min: float = -5.0
    dz_max: float = 5.0
    n_steps: int = 101
    beta: float = math.inf
    delta_L: float = 0.0
    alpha: float = 0.0
    mode: CurveMode = CurveMode.BOTH
    half_width: float = DEFAULT_HALF_WIDTH
    n_points: int = DEFAULT_N_POINTS
    max_workers: int = 1

    def __post_init__(self):
        if not self.dz_min < self.dz_max:
            raise InvalidArgumentError(f"dz_min ({self.dz_min}) must be below dz_max ({self.dz_max})")
        if int(self.n_steps) != self.n_steps or self.n_steps < 2:
            raise InvalidArgumentError(f"n_steps must be an integer >= 2, got {self.n_steps}")
        if self.max_workers < 1:
            raise InvalidArgumentError(f"max_workers must be >= 1, got {self.max_workers}")

    def dz_values(self) -> np.ndarray:
        return np.linspace(self.dz_min, self.dz_max, int(self.n_steps))

    def grid(self) -> FrequencyGrid:
        return make_grid(self.half_width, self.n_points)


@dataclass(frozen=True)
class CurvePoint:
    """One sample of a coincidence curve; absent columns are None."""
    dz: float
    pc_numeric: Optional[float] = None
    pc_analytic: Optional[float] = None

    @property
    def disagreement(self) -> Optional[float]:
        if self.pc_numeric is None or self.pc_analytic is None:
            return None
        return abs(self.pc_numeric - self.pc_analytic)


class Scenario:
    """Source state + splitter + closed form, swept over the path difference."""

    name = "scenario"

    def __init__(self, spec: CurveSpec):
        self.spec = spec

    @cached_property
    def grid(self) -> FrequencyGrid:
        return self.spec.grid()

    @cached_property
    def source_state(self) -> TwoPhotonState:
        """State at the balanced position dz = 0."""
        return self.build_source()

    def build_source(self) -> TwoPhotonState:
        raise NotImplementedError

    def analytic(self, dz: float) -> float:
        raise NotImplementedError

    def tolerance(self) -> float:
        """Allowed |numeric - analytic| on the default grid."""
        return 1e-3

    def input_state(self, dz: float) -> TwoPhotonState:
        """State arriving at the splitter for path difference dz."""
        return apply_path_phase(self.source_state, -dz / 2.0, dz / 2.0)

    def numeric(self, dz: float) -> float:
        return coincidence_probability(transform(self.input_state(dz), BALANCED))

    def point(self, dz: float) -> CurvePoint:
        mode = self.spec.mode
        return CurvePoint(
            dz=float(dz),
            pc_numeric=self.numeric(dz) if mode.numeric else None,
            pc_analytic=self.analytic(dz) if mode.analytic else None,
        )

    def curve(self) -> List[CurvePoint]:
        """Evaluate every dz; the result is ordered by dz whatever the worker count."""
        dz_values = [float(dz) for dz in self.spec.dz_values()]
        if self.spec.mode.numeric:
            _ = self.source_state  # build once before fanning out
        logger.info("%s: %d points (beta=%g, delta_L=%g, alpha=%g)", self.name, len(dz_values),
                    self.spec.beta, self.spec.delta_L, self.spec.alpha)
        if self.spec.max_workers == 1:
            return [self.point(dz) for dz in dz_values]
        with ThreadPoolExecutor(max_workers=self.spec.max_workers) as pool:
            return list(pool.map(self.point, dz_values))


class HomDipScenario(Scenario):
    """Symmetric down-conversion pair, one polarization."""

    name = "dip"

    def build_source(self) -> TwoPhotonState:
        return build_spdc_spectrum(self.grid, self.spec.beta)

    def analytic(self, dz: float) -> float:
        return hom_dip_closed_form(dz)


class InterferometerScenario(Scenario):
    """Down-conversion pair with beam 1 sent through an unbalanced interferometer."""

    name = "mz"

    def build_source(self) -> TwoPhotonState:
        pair = build_spdc_spectrum(self.grid, self.spec.beta)
        return apply_interferometer(pair, self.spec.delta_L, self.spec.alpha)

    def analytic(self, dz: float) -> float:
        # The smallest resolvable beta stands in for the delta-function limit.
        beta = 0.0 if self.spec.beta <= BETA_MIN else self.spec.beta
        return eq18_closed_form(dz, self.spec.delta_L, self.spec.alpha, beta)

    def tolerance(self) -> float:
        return 2e-2 if self.spec.beta < 0.2 else 1e-3


class PolProductScenario(Scenario):
    """Two independent photons in (H + V), wave-plate phase alpha on V of beam 1."""

    name = "pol-product"

    def build_source(self) -> TwoPhotonState:
        wp1 = gaussian_wavepacket(self.grid, h=1.0, v=np.exp(1j * self.spec.alpha))
        wp2 = gaussian_wavepacket(self.grid, h=1.0, v=1.0)
        return product_state(wp1, wp2)

    def analytic(self, dz: float) -> float:
        return eq21_closed_form(dz, self.spec.alpha)

    def tolerance(self) -> float:
        return 1e-6


class PolEntangledScenario(Scenario):
    """Polarization-entangled pair Q (HV + e^{i alpha} VH)."""

    name = "pol-entangled"

    def build_source(self) -> TwoPhotonState:
        spectrum = build_spdc_spectrum(self.grid, self.spec.beta).matrix(PolarizationChannel.HH)
        return polarization_pair_state(self.grid, spectrum, {
            PolarizationChannel.HV: 1.0,
            PolarizationChannel.VH: np.exp(1j * self.spec.alpha),
        })

    def analytic(self, dz: float) -> float:
        return eq29_closed_form(dz, self.spec.alpha)


SCENARIOS = {
    HomDipScenario.name: HomDipScenario,
    InterferometerScenario.name: InterferometerScenario,
    PolProductScenario.name: PolProductScenario,
    PolEntangledScenario.name: PolEntangledScenario,
}


def hom_dip_curve(spec: CurveSpec) -> List[CurvePoint]:
    return HomDipScenario(spec).curve()


def interferometer_curve(spec: CurveSpec) -> List[CurvePoint]:
    return InterferometerScenario(spec).curve()


def pol_product_curve(spec: CurveSpec) -> List[CurvePoint]:
    return PolProductScenario(spec).curve()


def pol_entangled_curve(spec: CurveSpec) -> List[CurvePoint]:
    return PolEntangledScenario(spec).curve()


# Figure panels: (scenario name, [(label, overrides), ...])
FIGURE_PANELS: Dict[str, Tuple[str, List[Tuple[str, dict]]]] = {
    "1a": ("mz", [
        (f"beta={beta_label} alpha={alpha_label}", {"beta": beta, "alpha": alpha, "delta_L": 5.0})
        for alpha_label, alpha in (("0", 0.0), ("pi/2", math.pi / 2))
        for beta_label, beta in (("0.02", 0.02), ("0.2", 0.2), ("0.5", 0.5), ("1", 1.0), ("inf", math.inf))
    ]),
    "1b": ("mz", [
        (f"alpha={alpha_label}", {"beta": math.inf, "alpha": alpha, "delta_L": 1.0})
        for alpha_label, alpha in (("0", 0.0), ("pi/4", math.pi / 4), ("pi/2", math.pi / 2))
    ]),
    "2a": ("pol-product", [
        (f"alpha={alpha_label}", {"alpha": alpha})
        for alpha_label, alpha in (("0", 0.0), ("pi/2", math.pi / 2), ("pi", math.pi))
    ]),
    "2b": ("pol-entangled", [
        (f"alpha={alpha_label}", {"alpha": alpha})
        for alpha_label, alpha in (("0", 0.0), ("pi/2", math.pi / 2), ("pi", math.pi))
    ]),
}


def figure_scenarios(panel: str, base: CurveSpec) -> Dict[str, Scenario]:
    """
    Scenarios of one figure panel.

    Args:
        panel: One of FIGURE_PANELS ("1a", "1b", "2a", "2b")
        base: Sweep range, grid and mode; scenario parameters are overridden

    Returns:
        Scenarios keyed by curve label, in panel order
    """
    if panel not in FIGURE_PANELS:
        raise InvalidArgumentError(
            f"unknown panel '{panel}', expected one of {', '.join(FIGURE_PANELS)}"
        )
    scenario_name, entries = FIGURE_PANELS[panel]
    scenario_cls = SCENARIOS[scenario_name]
    return {label: scenario_cls(replace(base, **overrides)) for label, overrides in entries}


def figure_curves(panel: str, base: CurveSpec) -> Dict[str, List[CurvePoint]]:
    """All curves of one figure panel, keyed by label."""
    return {label: scenario.curve() for label, scenario in figure_scenarios(panel, base).items()}
