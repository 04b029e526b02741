import io
import math

import pytest

from src.errors import InvalidArgumentError
from src.reporting.curve_csv import (
    curves_to_frame,
    emit_curve_csv,
    emit_figure_csv,
    format_number,
    write_text,
)
from src.scenarios.curves import CurvePoint


def render(points) -> str:
    buffer = io.StringIO()
    emit_curve_csv(points, buffer)
    return buffer.getvalue()


class TestCurveCsv:
    def test_two_points(self):
        text = render([CurvePoint(-1.0, 0.25, 0.3), CurvePoint(1.0, 0.1, 1 / 3)])
        assert text == "dz,pc_numeric,pc_analytic\n-1,0.25,0.3\n1,0.1,0.333333333\n"

    def test_absent_column_is_empty(self):
        text = render([CurvePoint(0.0, None, 0.5), CurvePoint(0.5, None, 0.75)])
        lines = text.splitlines()
        assert lines[1:] == ["0,,0.5", "0.5,,0.75"]

    def test_rows_sorted_by_dz(self):
        text = render([CurvePoint(2.0, 0.2, None), CurvePoint(-3.0, 0.3, None), CurvePoint(0.0, 0.0, None)])
        assert [line.split(",")[0] for line in text.splitlines()[1:]] == ["-3", "0", "2"]

    def test_nine_significant_digits(self):
        text = render([CurvePoint(math.pi, 1e-12, 0.123456789012)])
        assert text.splitlines()[1] == "3.14159265,0.000000000001,0.123456789"

    def test_small_values_stay_positional(self):
        text = render([CurvePoint(-0.0, 2.5e-5, 1.23456789012e-7)])
        assert text.splitlines()[1] == "0,0.000025,0.000000123456789"
        assert "e" not in text.splitlines()[1]

    def test_format_number(self):
        assert format_number(-5.0) == "-5"
        assert format_number(0.5) == "0.5"
        assert format_number(2 / 3) == "0.666666667"
        assert format_number(float("nan")) == ""

    def test_deterministic(self):
        points = [CurvePoint(dz / 7, math.sin(dz), math.cos(dz)) for dz in range(-20, 21)]
        assert render(points) == render(list(points))

    def test_empty_curve(self):
        with pytest.raises(InvalidArgumentError):
            render([])

    def test_writes_file(self, tmp_path):
        path = tmp_path / "out" / "dip.csv"
        emit_curve_csv([CurvePoint(0.0, 0.0, 0.0)], str(path))
        assert path.read_bytes() == b"dz,pc_numeric,pc_analytic\n0,0,0\n"

    def test_stdout(self, capsys):
        emit_curve_csv([CurvePoint(0.0, 0.5, None)])
        assert capsys.readouterr().out == "dz,pc_numeric,pc_analytic\n0,0.5,\n"

    def test_frame_columns(self):
        frame = curves_to_frame([CurvePoint(1.0, None, None)])
        assert list(frame.columns) == ["dz", "pc_numeric", "pc_analytic"]
        assert frame["pc_numeric"].isna().all()


class TestFigureCsv:
    def test_long_format(self):
        buffer = io.StringIO()
        emit_figure_csv({
            "alpha=0": [CurvePoint(1.0, 0.5, 0.5), CurvePoint(0.0, 0.0, 0.0)],
            "alpha=pi": [CurvePoint(0.0, 1.0, 1.0)],
        }, buffer)
        assert buffer.getvalue() == (
            "label,dz,pc_numeric,pc_analytic\n"
            "alpha=0,0,0,0\n"
            "alpha=0,1,0.5,0.5\n"
            "alpha=pi,0,1,1\n"
        )

    def test_empty_figure(self):
        with pytest.raises(InvalidArgumentError):
            emit_figure_csv({}, io.StringIO())


def test_write_text(tmp_path):
    path = tmp_path / "report.txt"
    write_text("K=1.000000\n", path)
    assert path.read_text() == "K=1.000000\n"
