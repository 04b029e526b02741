"""
Amplitude file reader/writer.

Plain-text serialization of a two-photon state:

    # comment lines and blank lines are ignored
    grid: <half_width> <n_points>
    <HH|VV|HV|VH> <i> <j> <re> <im>
    ...

Indices are 0-based into the declared grid; entries not listed are zero.
"""
from pathlib import Path
from typing import Dict, Set, Tuple

import numpy as np

from src.errors import AmplitudeParseError, InvalidArgumentError
from src.spectral.grid import make_grid
from src.spectral.state import CHANNEL_ORDER, PolarizationChannel, TwoPhotonState


HEADER_KEY = "grid:"


def _parse_header(line: str, line_number: int):
    parts = line.split()
    if len(parts) != 3 or parts[0] != HEADER_KEY:
        raise AmplitudeParseError(
            f"expected header 'grid: <half_width> <n_points>', got '{line}'", line_number
        )
    try:
        half_width = float(parts[1])
        n_points = int(parts[2])
    except ValueError:
        raise AmplitudeParseError(f"malformed grid header '{line}'", line_number) from None
    try:
        return make_grid(half_width, n_points)
    except InvalidArgumentError as e:
        raise AmplitudeParseError(str(e), line_number) from None


def parse_amplitude_file(text: str) -> TwoPhotonState:
    """
    Parse an amplitude document into a normalized state.

    Args:
        text: Document contents

    Returns:
        TwoPhotonState on the declared grid, normalized to unit norm

    Raises:
        AmplitudeParseError: malformed header or row, duplicate entry,
            index out of range, or no rows at all
    """
    grid = None
    matrices: Dict[PolarizationChannel, np.ndarray] = {}
    seen: Set[Tuple[PolarizationChannel, int, int]] = set()

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if grid is None:
            grid = _parse_header(line, line_number)
            continue

        parts = line.split()
        if len(parts) != 5:
            raise AmplitudeParseError(f"expected '<channel> <i> <j> <re> <im>', got '{line}'", line_number)
        try:
            channel = PolarizationChannel(parts[0])
        except ValueError:
            raise AmplitudeParseError(f"unknown channel '{parts[0]}'", line_number) from None
        try:
            i, j = int(parts[1]), int(parts[2])
            value = complex(float(parts[3]), float(parts[4]))
        except ValueError:
            raise AmplitudeParseError(f"malformed row '{line}'", line_number) from None

        if not (0 <= i < grid.n_points and 0 <= j < grid.n_points):
            raise AmplitudeParseError(f"index ({i}, {j}) outside grid of {grid.n_points} points", line_number)
        if not np.isfinite(value):
            raise AmplitudeParseError(f"non-finite amplitude in '{line}'", line_number)
        key = (channel, i, j)
        if key in seen:
            raise AmplitudeParseError(f"duplicate entry ({channel.value}, {i}, {j})", line_number)
        seen.add(key)

        if channel not in matrices:
            matrices[channel] = np.zeros((grid.n_points, grid.n_points), dtype=complex)
        matrices[channel][i, j] = value

    if grid is None:
        raise AmplitudeParseError("missing grid header")
    if not seen:
        raise AmplitudeParseError("no amplitude rows")

    return TwoPhotonState.from_matrices(grid, matrices).normalized()


def emit_amplitude_file(state: TwoPhotonState) -> str:
    """Serialize the non-zero entries of a state; floats are written round-trip exact."""
    lines = [f"{HEADER_KEY} {state.grid.half_width!r} {state.grid.n_points}"]
    for channel in CHANNEL_ORDER:
        if channel not in state.channels:
            continue
        matrix = state.matrix(channel)
        for i, j in zip(*np.nonzero(matrix)):
            value = matrix[i, j]
            lines.append(f"{channel.value} {i} {j} {float(value.real)!r} {float(value.imag)!r}")
    return "\n".join(lines) + "\n"


def read_amplitude_file(filepath: str) -> TwoPhotonState:
    """Load a state from a UTF-8 amplitude file on disk."""
    path = Path(filepath)
    if not path.exists():
        raise FileNotFoundError(f"Amplitude file not found: {filepath}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise AmplitudeParseError(f"not valid UTF-8 at byte {e.start}") from None
    return parse_amplitude_file(text)


def save_amplitude_file(state: TwoPhotonState, filepath: str) -> None:
    """Write a state to an amplitude file."""
    path = Path(filepath)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_amplitude_file(state), encoding="utf-8")
