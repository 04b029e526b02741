"""
Error types for the two-photon interference simulator.

Library code raises these; only the command-line runner turns them into
exit codes.
"""
from typing import Optional


class InterferenceError(Exception):
    """Base class for all simulator errors."""


class InvalidArgumentError(InterferenceError, ValueError):
    """A parameter is outside its allowed range."""


class UnsupportedParameterError(InterferenceError, ValueError):
    """A parameter is valid physics but cannot be represented numerically."""


class IncompatibleGridsError(InterferenceError, ValueError):
    """Two amplitudes that must share a frequency grid do not."""


class DegenerateStateError(InterferenceError, ArithmeticError):
    """A state has (numerically) zero norm where a normalizable state is required."""


class DegenerateNormalizationError(InterferenceError, ArithmeticError):
    """A closed-form normalization constant vanishes."""


class AmplitudeParseError(InterferenceError, ValueError):
    """An amplitude file does not follow the expected grammar."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
