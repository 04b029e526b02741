"""
CSV output for coincidence curves.

Header `dz,pc_numeric,pc_analytic`, rows sorted by dz, absent values as empty
fields, numbers in positional notation rounded to 9 significant digits with
trailing zeros trimmed (`-1`, `0.333333333`, `0.000000000001`). Output is
byte-identical for identical input.
"""
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, List, Optional, TextIO, Union

import numpy as np
import pandas as pd

from src.errors import InvalidArgumentError
from src.scenarios.curves import CurvePoint


CURVE_COLUMNS = ["dz", "pc_numeric", "pc_analytic"]
SIGNIFICANT_DIGITS = 9

Destination = Union[str, Path, TextIO, None]


def _value(value: Optional[float]) -> float:
    return np.nan if value is None else float(value)


def curves_to_frame(points: List[CurvePoint]) -> pd.DataFrame:
    """Curve points as a DataFrame ordered by dz; missing values are NaN."""
    frame = pd.DataFrame(
        {
            "dz": [float(p.dz) for p in points],
            "pc_numeric": [_value(p.pc_numeric) for p in points],
            "pc_analytic": [_value(p.pc_analytic) for p in points],
        },
        columns=CURVE_COLUMNS,
    )
    return frame.sort_values("dz", kind="mergesort").reset_index(drop=True)


def figure_to_frame(curves: Dict[str, List[CurvePoint]]) -> pd.DataFrame:
    """Long-format table of several labelled curves, in label order."""
    frames = []
    for label, points in curves.items():
        frame = curves_to_frame(points)
        frame.insert(0, "label", label)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


@contextmanager
def open_destination(destination: Destination) -> Iterator[TextIO]:
    """Yield a text stream for a path, an open stream, or stdout (None / '-')."""
    if destination is None or destination == "-":
        yield sys.stdout
    elif isinstance(destination, (str, Path)):
        path = Path(destination)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as stream:
            yield stream
    else:
        yield destination


def format_number(value: float) -> str:
    """Positional decimal with SIGNIFICANT_DIGITS significant digits; NaN becomes an empty field."""
    if np.isnan(value):
        return ""
    return np.format_float_positional(value + 0.0, precision=SIGNIFICANT_DIGITS, unique=False,
                                      fractional=False, trim="-")


def frame_to_csv(frame: pd.DataFrame) -> str:
    formatted = frame.copy()
    for column in formatted.select_dtypes(include="number").columns:
        formatted[column] = formatted[column].map(format_number)
    return formatted.to_csv(index=False, lineterminator="\n")


def emit_curve_csv(points: List[CurvePoint], destination: Destination = None) -> None:
    """
    Write a curve as CSV.

    Args:
        points: Non-empty list of curve points
        destination: File path, open text stream, or None / '-' for stdout
    """
    if not points:
        raise InvalidArgumentError("cannot write an empty curve")
    with open_destination(destination) as stream:
        stream.write(frame_to_csv(curves_to_frame(points)))


def emit_figure_csv(curves: Dict[str, List[CurvePoint]], destination: Destination = None) -> None:
    """Write labelled curves as one long-format CSV (label,dz,pc_numeric,pc_analytic)."""
    if not curves or not any(curves.values()):
        raise InvalidArgumentError("cannot write an empty figure")
    with open_destination(destination) as stream:
        stream.write(frame_to_csv(figure_to_frame(curves)))


def write_text(text: str, destination: Destination = None) -> None:
    """Write a text report to a path, a stream, or stdout."""
    with open_destination(destination) as stream:
        stream.write(text)
