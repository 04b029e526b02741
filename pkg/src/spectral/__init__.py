from .grid import FrequencyGrid, make_grid
from .state import (
    JointAmplitude, Polarization, PolarizationChannel, SinglePhotonWavepacket, TwoPhotonState,
    apply_interferometer, apply_path_phase, build_spdc_spectrum, gaussian_wavepacket, product_state,
)
from .symmetry import SymmetryClass, classify_symmetry, exchange_decompose
from .schmidt import SchmidtReport, schmidt_analysis
