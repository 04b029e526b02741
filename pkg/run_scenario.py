#!/usr/bin/env python3
"""
Two-photon interference at a lossless beam splitter.

Usage:
    python run_scenario.py dip --steps 101 --mode both
    python run_scenario.py mz --beta 0.2 --alpha 1.5707963267948966 --out mz.csv
    python run_scenario.py pol-entangled --alpha 3.141592653589793
    python run_scenario.py classify --in data/singlet.amp
    python run_scenario.py figure --panel 1a --out fig1a.csv
"""
import logging
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.app.config import parse_config
from src.app.runner import run


def main(argv=None):
    config = parse_config(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
