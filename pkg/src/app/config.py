"""
Command-line configuration.

`build_parser` defines one sub-parser per subcommand; `parse_config` turns
the parsed namespace into a validated-on-demand `RunConfig`. Parameters a
subcommand does not use keep their defaults and are ignored.
"""
import argparse
import math
from dataclasses import dataclass
from typing import List, Optional

from src.errors import InvalidArgumentError
from src.scenarios.curves import FIGURE_PANELS, SCENARIOS, CurveMode, CurveSpec
from src.splitter.beam_splitter import BeamSplitterParams


CURVE_COMMANDS = tuple(SCENARIOS)
ANALYSIS_COMMANDS = ("classify", "schmidt")
SUBCOMMANDS = CURVE_COMMANDS + ANALYSIS_COMMANDS + ("figure",)

DEFAULTS = {
    "grid_n": 257,
    "half_width": 6.0,
    "steps": 101,
    "mode": CurveMode.BOTH.value,
    "dz_min": -5.0,
    "dz_max": 5.0,
    "alpha": 0.0,
    "workers": 1,
    "theta": math.pi / 4,
    "phi_tau": 0.0,
    "phi_rho": 0.0,
}

# Per-subcommand defaults for parameters whose natural value depends on the scenario
BETA_DEFAULTS = {
    "dip": math.inf,
    "mz": 0.02,
    "pol-entangled": math.inf,
}
DELTA_L_DEFAULTS = {
    "mz": 5.0,
}

SUBCOMMAND_HELP = {
    "dip": "HOM dip of a down-conversion pair",
    "mz": "Down-conversion pair with an unbalanced interferometer in beam 1",
    "pol-product": "Two independent photons with a wave-plate phase on beam 1",
    "pol-entangled": "Polarization-entangled pair HV + e^{i alpha} VH",
    "classify": "Symmetry, entanglement and predicted P_c of an amplitude file",
    "schmidt": "Schmidt decomposition of an amplitude file",
    "figure": "All curves of one figure panel as a long-format CSV",
}


@dataclass
class RunConfig:
    """Everything `run` needs for one invocation."""
    subcommand: str
    beta: float = math.inf
    delta_L: float = 0.0
    alpha: float = DEFAULTS["alpha"]
    dz_min: float = DEFAULTS["dz_min"]
    dz_max: float = DEFAULTS["dz_max"]
    steps: int = DEFAULTS["steps"]
    grid_n: int = DEFAULTS["grid_n"]
    half_width: float = DEFAULTS["half_width"]
    mode: str = DEFAULTS["mode"]
    out: Optional[str] = None
    input_path: Optional[str] = None
    panel: Optional[str] = None
    theta: float = DEFAULTS["theta"]
    phi_tau: float = DEFAULTS["phi_tau"]
    phi_rho: float = DEFAULTS["phi_rho"]
    workers: int = DEFAULTS["workers"]
    verbose: bool = False

    @property
    def is_curve(self) -> bool:
        return self.subcommand in CURVE_COMMANDS or self.subcommand == "figure"

    def validate(self) -> None:
        """Check the parameter set for the chosen subcommand."""
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidArgumentError(f"unknown subcommand '{self.subcommand}'")

        if self.subcommand in ANALYSIS_COMMANDS:
            if not self.input_path:
                raise InvalidArgumentError(f"{self.subcommand} needs an amplitude file (--in)")
            self.splitter()
            return

        if self.subcommand == "figure" and self.panel not in FIGURE_PANELS:
            raise InvalidArgumentError(
                f"figure needs --panel, one of {', '.join(FIGURE_PANELS)}"
            )
        if math.isnan(self.beta) or self.beta <= 0:
            raise InvalidArgumentError(f"beta must be positive (or inf), got {self.beta}")
        for name in ("delta_L", "alpha", "dz_min", "dz_max"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite, got {getattr(self, name)}")
        if self.grid_n < 2:
            raise InvalidArgumentError(f"grid-n must be >= 2, got {self.grid_n}")
        if not self.half_width > 0:
            raise InvalidArgumentError(f"half-width must be positive, got {self.half_width}")
        try:
            CurveMode(self.mode)
        except ValueError:
            raise InvalidArgumentError(f"unknown mode '{self.mode}'") from None
        self.curve_spec()

    def curve_spec(self) -> CurveSpec:
        return CurveSpec(
            dz_min=self.dz_min,
            dz_max=self.dz_max,
            n_steps=self.steps,
            beta=self.beta,
            delta_L=self.delta_L,
            alpha=self.alpha,
            mode=CurveMode(self.mode),
            half_width=self.half_width,
            n_points=self.grid_n,
            max_workers=self.workers,
        )

    def splitter(self) -> BeamSplitterParams:
        return BeamSplitterParams(theta=self.theta, phi_tau=self.phi_tau, phi_rho=self.phi_rho)


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--out', '-o', type=str, default=None,
                        help='Output file (default: standard output)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug diagnostics on stderr')


def _add_curve_args(parser: argparse.ArgumentParser, command: str) -> None:
    parser.add_argument('--dz-min', type=float, default=DEFAULTS["dz_min"],
                        help=f'Smallest path difference in c/sigma (default: {DEFAULTS["dz_min"]})')
    parser.add_argument('--dz-max', type=float, default=DEFAULTS["dz_max"],
                        help=f'Largest path difference in c/sigma (default: {DEFAULTS["dz_max"]})')
    parser.add_argument('--steps', type=int, default=DEFAULTS["steps"],
                        help=f'Number of curve points (default: {DEFAULTS["steps"]})')
    parser.add_argument('--grid-n', type=int, default=DEFAULTS["grid_n"],
                        help=f'Frequency grid points (default: {DEFAULTS["grid_n"]})')
    parser.add_argument('--half-width', type=float, default=DEFAULTS["half_width"],
                        help=f'Grid half width in units of sigma (default: {DEFAULTS["half_width"]})')
    parser.add_argument('--mode', choices=[m.value for m in CurveMode], default=DEFAULTS["mode"],
                        help=f'Columns to compute (default: {DEFAULTS["mode"]})')
    parser.add_argument('--workers', type=int, default=DEFAULTS["workers"],
                        help='Threads used to evaluate curve points (default: 1)')

    if command == "figure":
        parser.add_argument('--panel', required=True, choices=list(FIGURE_PANELS),
                            help='Figure panel to reproduce')
        return

    if command in BETA_DEFAULTS:
        beta = BETA_DEFAULTS[command]
        parser.add_argument('--beta', type=float, default=beta,
                            help=f'Pump-to-photon bandwidth ratio, "inf" allowed (default: {beta})')
    if command == "mz":
        delta_l = DELTA_L_DEFAULTS["mz"]
        parser.add_argument('--delta-l', type=float, default=delta_l,
                            help=f'Interferometer arm difference in c/sigma (default: {delta_l})')
    if command != "dip":
        parser.add_argument('--alpha', type=float, default=DEFAULTS["alpha"],
                            help='Phase in radians (default: 0)')


def _add_analysis_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--in', dest='input_path', required=True, type=str,
                        help='Amplitude file to analyze')
    parser.add_argument('--theta', type=float, default=DEFAULTS["theta"],
                        help='Splitter mixing angle in radians (default: pi/4)')
    parser.add_argument('--phi-tau', type=float, default=DEFAULTS["phi_tau"],
                        help='Splitter transmission phase (default: 0)')
    parser.add_argument('--phi-rho', type=float, default=DEFAULTS["phi_rho"],
                        help='Splitter reflection phase (default: 0)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Two-photon interference at a lossless beam splitter')
    subparsers = parser.add_subparsers(dest='subcommand', required=True, metavar='SUBCOMMAND')
    for command in SUBCOMMANDS:
        sub = subparsers.add_parser(command, help=SUBCOMMAND_HELP[command],
                                    description=SUBCOMMAND_HELP[command])
        if command in ANALYSIS_COMMANDS:
            _add_analysis_args(sub)
        else:
            _add_curve_args(sub, command)
        _add_output_args(sub)
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """Parse command-line arguments; argparse itself exits with 2 on bad syntax."""
    args = vars(build_parser().parse_args(argv))
    command = args.pop("subcommand")
    if "delta_l" in args:
        args["delta_L"] = args.pop("delta_l")
    return RunConfig(subcommand=command, **args)
