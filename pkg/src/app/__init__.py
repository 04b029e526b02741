from .config import DEFAULTS, RunConfig, build_parser, parse_config
from .runner import EXIT_DEGENERATE, EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_TOLERANCE, run
