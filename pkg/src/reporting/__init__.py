from .amplitude_file import emit_amplitude_file, parse_amplitude_file, read_amplitude_file, save_amplitude_file
from .curve_csv import CURVE_COLUMNS, curves_to_frame, emit_curve_csv, emit_figure_csv, figure_to_frame
from .reports import Classification, format_classification_report, format_schmidt_report
