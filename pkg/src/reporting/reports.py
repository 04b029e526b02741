"""
Text reports for the `classify` and `schmidt` subcommands.

Both build a list of lines and join them, ending with a one-line summary
that scripts can grep for.
"""
from dataclasses import dataclass
from typing import Dict, List

from src.spectral.schmidt import SchmidtReport
from src.spectral.state import CHANNEL_ORDER, PolarizationChannel
from src.spectral.symmetry import SymmetryClass, SymmetryWeights
from src.splitter.beam_splitter import BeamSplitterParams
from src.splitter.coincidence import CoincidencePrediction


# Singular values listed in the Schmidt report
LEADING_VALUES = 8


@dataclass(frozen=True)
class Classification:
    """Everything the classify report shows about one input state."""
    symmetry: SymmetryClass
    weights: SymmetryWeights
    channel_norms: Dict[PolarizationChannel, float]
    schmidt: SchmidtReport
    params: BeamSplitterParams
    prediction: CoincidencePrediction


def _verdict(p_c: float) -> str:
    if p_c > 0.5 + 1e-6:
        return "anti-coalescence"
    if p_c < 0.5 - 1e-6:
        return "coalescence"
    return "no interference"


def classification_summary(result: Classification) -> str:
    return (
        f"symmetry={result.symmetry.value}, "
        f"K={result.schmidt.schmidt_number:.6f}, "
        f"predicted P_c={result.prediction.from_state:.6f}"
    )


def format_classification_report(result: Classification) -> str:
    """Format a state classification as a readable report."""
    lines = []
    lines.append("=" * 70)
    lines.append("TWO-PHOTON STATE CLASSIFICATION")
    lines.append("=" * 70)

    lines.append("Channel norms:")
    for channel in CHANNEL_ORDER:
        norm = result.channel_norms.get(channel, 0.0)
        lines.append(f"  {channel.value:<4} {norm:.6f}")

    lines.append("")
    lines.append(f"Exchange symmetry: {result.symmetry.value}")
    lines.append(f"  symmetric part:     {result.weights.symmetric:.6f}")
    lines.append(f"  antisymmetric part: {result.weights.antisymmetric:.6f}")

    lines.append("")
    entangled = "entangled" if result.schmidt.entangled else "separable"
    lines.append(f"Schmidt number K: {result.schmidt.schmidt_number:.6f} ({entangled})")

    params = result.params
    prediction = result.prediction
    lines.append("")
    lines.append(
        f"Beam splitter: theta={params.theta:.6f} phi_tau={params.phi_tau:.6f} "
        f"phi_rho={params.phi_rho:.6f}"
    )
    lines.append(f"  coincidence P_c: {prediction.from_state:.6f} ({_verdict(prediction.from_state)})")
    if prediction.from_formula is not None:
        lines.append(f"  50/50 formula:   {prediction.from_formula:.6f}")
    lines.append(f"  same port:       {prediction.same_port:.6f}")

    lines.append("-" * 70)
    lines.append(classification_summary(result))
    return "\n".join(lines) + "\n"


def format_schmidt_report(report: SchmidtReport, leading: int = LEADING_VALUES) -> str:
    """Format a Schmidt decomposition: leading coefficients and K."""
    lines: List[str] = []
    lines.append("=" * 70)
    lines.append("SCHMIDT DECOMPOSITION")
    lines.append("=" * 70)

    nonzero = sum(1 for p in report.probabilities if p > 1e-15)
    lines.append(f"Non-zero Schmidt coefficients: {nonzero}")
    lines.append("")
    lines.append(f"  {'#':>3}  {'singular value':>16}  {'weight':>10}")
    for index, (s, p) in enumerate(zip(report.singular_values[:leading], report.probabilities)):
        lines.append(f"  {index + 1:>3}  {s:>16.9f}  {p:>10.6f}")

    lines.append("-" * 70)
    lines.append(f"K={report.schmidt_number:.6f}, entangled={'yes' if report.entangled else 'no'}")
    return "\n".join(lines) + "\n"
