"""
Subcommand dispatch and exit codes.

Library code raises; this is the only place exceptions become exit codes.
"""
import logging
from typing import Dict, List

from src.app.config import RunConfig
from src.errors import (
    AmplitudeParseError,
    DegenerateNormalizationError,
    DegenerateStateError,
    IncompatibleGridsError,
    InvalidArgumentError,
    UnsupportedParameterError,
)
from src.reporting.amplitude_file import read_amplitude_file
from src.reporting.curve_csv import emit_curve_csv, emit_figure_csv, write_text
from src.reporting.reports import Classification, format_classification_report, format_schmidt_report
from src.scenarios.curves import SCENARIOS, CurvePoint, Scenario, figure_scenarios
from src.spectral.schmidt import schmidt_analysis
from src.spectral.symmetry import classify_symmetry, symmetry_weights
from src.splitter.coincidence import predicted_coincidence

logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_TOLERANCE = 4


def _tolerance_breaches(scenarios: Dict[str, Scenario], curves: Dict[str, List[CurvePoint]]) -> int:
    """Log every curve whose numeric and analytic columns disagree too much."""
    breaches = 0
    for label, points in curves.items():
        disagreements = [p.disagreement for p in points if p.disagreement is not None]
        if not disagreements:
            continue
        worst = max(disagreements)
        tolerance = scenarios[label].tolerance()
        if worst > tolerance:
            breaches += 1
            logger.error("%s: numeric and analytic P_c differ by %.3g (tolerance %.3g)",
                         label, worst, tolerance)
        else:
            logger.debug("%s: worst disagreement %.3g", label, worst)
    return breaches


def _run_curve(config: RunConfig) -> int:
    spec = config.curve_spec()
    if config.subcommand == "figure":
        scenarios = figure_scenarios(config.panel, spec)
    else:
        scenarios = {config.subcommand: SCENARIOS[config.subcommand](spec)}

    curves = {label: scenario.curve() for label, scenario in scenarios.items()}
    if config.subcommand == "figure":
        emit_figure_csv(curves, config.out)
    else:
        emit_curve_csv(curves[config.subcommand], config.out)

    if _tolerance_breaches(scenarios, curves):
        return EXIT_TOLERANCE
    return EXIT_OK


def classify(config: RunConfig) -> Classification:
    state = read_amplitude_file(config.input_path)
    params = config.splitter()
    return Classification(
        symmetry=classify_symmetry(state),
        weights=symmetry_weights(state),
        channel_norms=state.channel_norms(),
        schmidt=schmidt_analysis(state),
        params=params,
        prediction=predicted_coincidence(state, params),
    )


def _run_analysis(config: RunConfig) -> int:
    if config.subcommand == "classify":
        report = format_classification_report(classify(config))
    else:
        report = format_schmidt_report(schmidt_analysis(read_amplitude_file(config.input_path)))
    write_text(report, config.out)
    return EXIT_OK


def run(config: RunConfig) -> int:
    """
    Execute one subcommand.

    Returns:
        0 on success, 1 on I/O failure, 2 on invalid input, 3 on a degenerate
        state or normalization, 4 when numeric and analytic curves disagree
        beyond the scenario tolerance (the CSV is still written)
    """
    try:
        config.validate()
        logger.debug("running %s", config)
        if config.is_curve:
            return _run_curve(config)
        return _run_analysis(config)
    except AmplitudeParseError as e:
        logger.error("Error: cannot parse %s: %s", config.input_path, e)
        return EXIT_INVALID
    except (InvalidArgumentError, UnsupportedParameterError, IncompatibleGridsError) as e:
        logger.error("Error: %s", e)
        return EXIT_INVALID
    except (DegenerateStateError, DegenerateNormalizationError) as e:
        logger.error("Error: %s", e)
        return EXIT_DEGENERATE
    except OSError as e:
        logger.error("Error: %s", e)
        return EXIT_IO
